#include <benchmark/benchmark.h>

#include "parhiggs/arrangement.hpp"
#include "parhiggs/betti.hpp"
#include "parhiggs/morse.hpp"
#include "parhiggs/series.hpp"

using namespace parhiggs;

static void BM_SymmetricPowerCoeff(benchmark::State& state) {
    const i64 h = state.range(0);
    const i64 g = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(macdonald_coeff(h, g));
}
BENCHMARK(BM_SymmetricPowerCoeff)->Args({6, 2})->Args({12, 3})->Args({24, 4});

static void BM_HiggsClosedForm(benchmark::State& state) {
    Curve c = make_curve(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(higgs_poincare_closed(c));
}
BENCHMARK(BM_HiggsClosedForm)->Args({2, 4})->Args({3, 6})->Args({5, 8});

static void BM_HiggsFromStratification(benchmark::State& state) {
    Curve c = make_curve(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(higgs_poincare_morse(c));
}
BENCHMARK(BM_HiggsFromStratification)->Args({2, 4})->Args({3, 6});

static void BM_StrataEnumeration(benchmark::State& state) {
    WeightVector w = reference_weights(make_curve(state.range(0), state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_strata(w));
}
BENCHMARK(BM_StrataEnumeration)->Args({2, 4})->Args({3, 6});

static void BM_ChamberEnumeration(benchmark::State& state) {
    Curve c = make_curve(0, state.range(0));
    const i64 K = state.range(1);
    const int threads = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(c, K, threads, 1));
}
BENCHMARK(BM_ChamberEnumeration)
    ->Args({4, 16, 1})
    ->Args({5, 16, 1})
    ->Args({5, 16, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_WallcrossCheck(benchmark::State& state) {
    Curve c = make_curve(0, 5);
    std::vector<Wall> walls = enumerate_walls(c);
    for (auto _ : state)
        for (const Wall& w : walls) benchmark::DoNotOptimize(wallcross_delta_check(w, c));
}
BENCHMARK(BM_WallcrossCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
