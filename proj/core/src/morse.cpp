#include "parhiggs/morse.hpp"

#include <algorithm>

#include "parhiggs/errors.hpp"
#include "parhiggs/series.hpp"

namespace parhiggs {

std::vector<Stratum> enumerate_strata(const WeightVector& w) {
    const Curve& c = w.curve;
    const i64 g = c.genus;
    const i64 n = c.points;
    std::vector<Stratum> strata;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (i64 i = 0; i < n; ++i)
            bits[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
        EVector e{std::move(bits)};
        const i64 ew = e.weight();
        BigRat bsum = beta_sum(w, e);
        if (is_integer(bsum))
            throw NonGenericError("on_wall",
                                  "weights lie on a wall: the line-subbundle data (d=" +
                                      BigInt(-numerator(bsum)).str() + ", e=" + e.str() +
                                      ") has parabolic degree zero");
        // d > -beta_sum (strict; genericity excludes equality) and
        // d <= g - 1 - |e|/2, i.e. 2d <= 2g - 2 - |e|.
        const i64 dmin = floor_i64(-bsum) + 1;
        const i64 dmax = floor_i64(BigRat(2 * g - 2 - ew, 2));
        for (i64 d = dmin; d <= dmax; ++d) {
            Stratum s;
            s.d = d;
            s.e = e;
            s.lambda = 2 * (n + 2 * d + g - 1 + ew);
            s.h = 2 * g - 2 - 2 * d - ew;
            s.critical_value = BigRat(d) + bsum;
            strata.push_back(std::move(s));
        }
    }
    std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
        if (a.critical_value != b.critical_value)
            return a.critical_value < b.critical_value;
        if (a.d != b.d)
            return a.d < b.d;
        return a.e.bits < b.e.bits;
    });
    return strata;
}

IntPoly stratum_poincare(const Stratum& s, const Curve& c) {
    const i64 g = c.genus;
    IntPoly cover = IntPoly::monomial((pow2(2 * g) - 1) * binom(2 * g - 2, s.h), s.h);
    return cover + macdonald_coeff(s.h, g);
}

IntPoly weighted_stratum_sum(const WeightVector& w) {
    IntPoly total;
    for (const Stratum& s : enumerate_strata(w))
        total += stratum_poincare(s, w.curve).shifted(s.lambda);
    return total;
}

std::optional<Stratum> minimum_stratum(const WeightVector& w) {
    if (w.curve.genus != 0)
        throw UsageError("wrong_genus", "index-zero strata exist only for genus 0");
    std::optional<Stratum> found;
    for (const Stratum& s : enumerate_strata(w)) {
        if (s.lambda != 0)
            continue;
        if (found)
            throw ConsistencyError("identity_failure",
                                   "two index-zero strata in one chamber: " +
                                       found->e.str() + " and " + s.e.str());
        found = s;
    }
    return found;
}

} // namespace parhiggs
