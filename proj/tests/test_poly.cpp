#include "doctest.h"

#include "parhiggs/errors.hpp"
#include "parhiggs/poly.hpp"
#include "parhiggs/series.hpp"

using namespace parhiggs;

namespace {

// Independent oracle for the Poincare polynomial of the h-th symmetric power
// of a genus-g curve: sum_{b=0}^{h} sum_{k=0}^{h-b} binom(2g, k) t^{k+2b}.
IntPoly symmetric_power_brute(i64 h, i64 g) {
    IntPoly p;
    if (h < 0) return p;
    for (i64 b = 0; b <= h; ++b)
        for (i64 k = 0; k <= h - b; ++k)
            p += IntPoly::monomial(binom(2 * g, k), static_cast<std::size_t>(k + 2 * b));
    return p;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("basic arithmetic and structure") {
    IntPoly one = IntPoly::monomial(BigInt(1), 0);
    IntPoly t = IntPoly::t();
    IntPoly p = one + t * t * IntPoly::monomial(BigInt(3), 0); // 1 + 3t^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(7) == 0);
    CHECK(p.str() == "1 + 3*t^2");
    CHECK((p - p).is_zero());
    CHECK(p.eval(BigInt(-1)) == 4);
    CHECK(p.shifted(3).degree() == 5);
    CHECK((t.pow(4)).coeff(4) == 1);
    CHECK(t.pow(0).str() == "1");
}

TEST_CASE("exact division succeeds and is checked") {
    IntPoly one = IntPoly::monomial(BigInt(1), 0);
    IntPoly t = IntPoly::t();
    IntPoly num = one - t.pow(6); // (1-t^2)(1+t^2+t^4)
    IntPoly den = one - t.pow(2);
    IntPoly q = IntPoly::exact_div(num, den);
    CHECK(q.str() == "1 + t^2 + t^4");
    CHECK_THROWS_AS(IntPoly::exact_div(one + t, den), ConsistencyError);
}

TEST_CASE("palindromes and json") {
    IntPoly one = IntPoly::monomial(BigInt(1), 0);
    IntPoly t = IntPoly::t();
    CHECK((one + t + t.pow(2)).palindromic());
    CHECK_FALSE((one + t.pow(2) + t.pow(3)).palindromic());
    IntPoly p = one + IntPoly::monomial(BigInt(5), 2);
    CHECK(p.json() == R"({"var":"t","coeffs":["1","0","5"]})");
    CHECK(p.nonnegative_coeffs());
    CHECK_FALSE((one - t).nonnegative_coeffs());
}

TEST_CASE("projective spaces and jacobians") {
    CHECK(projective_space_poincare(-1).is_zero());
    CHECK(projective_space_poincare(0).str() == "1");
    CHECK(projective_space_poincare(2).str() == "1 + t^2 + t^4");
    CHECK(jacobian_poincare(0).str() == "1");
    CHECK(jacobian_poincare(2).str() == "1 + 4*t + 6*t^2 + 4*t^3 + t^4");
}

TEST_CASE("symmetric power coefficients match the brute-force double sum") {
    for (i64 g = 0; g <= 3; ++g)
        for (i64 h = -2; h <= 10; ++h)
            CHECK(macdonald_coeff(h, g) == symmetric_power_brute(h, g));
}

TEST_CASE("symmetric power structure") {
    CHECK(macdonald_coeff(-1, 2).is_zero());
    // Genus zero: S^h(P^1) is the projective space P^h.
    for (i64 h = 0; h <= 8; ++h)
        CHECK(macdonald_coeff(h, 0) == projective_space_poincare(h));
    // S^1 X = X.
    for (i64 g = 0; g <= 4; ++g) {
        IntPoly x = macdonald_coeff(1, g);
        CHECK(x.coeff(0) == 1);
        CHECK(x.coeff(1) == 2 * g);
        CHECK(x.coeff(2) == 1);
        CHECK(x.degree() == 2);
    }
    // Poincare duality: palindromic of degree 2h.
    for (i64 g = 1; g <= 3; ++g)
        for (i64 h = 1; h <= 6; ++h) {
            IntPoly p = macdonald_coeff(h, g);
            CHECK(p.degree() == static_cast<std::size_t>(2 * h));
            CHECK(p.palindromic());
            CHECK(p.nonnegative_coeffs());
        }
}

} // TEST_SUITE
