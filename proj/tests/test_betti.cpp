#include "doctest.h"

#include "parhiggs/arrangement.hpp"
#include "parhiggs/betti.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/morse.hpp"

using namespace parhiggs;

TEST_SUITE("betti") {

TEST_CASE("pinned Higgs polynomials for the smallest curves") {
    CHECK(higgs_poincare_closed(make_curve(0, 3)).str() == "1");
    CHECK(higgs_poincare_closed(make_curve(1, 1)).str() == "1 + 5*t^2");
    CHECK(higgs_poincare_closed(make_curve(0, 4)).str() == "1 + 5*t^2");
    CHECK(higgs_poincare_closed(make_curve(1, 2)).str() ==
          "1 + 3*t^2 + 2*t^3 + 10*t^4");
    // Negative-dimensional moduli: the polynomial is zero.
    CHECK(higgs_poincare_closed(make_curve(0, 1)).is_zero());
    CHECK(higgs_poincare_closed(make_curve(0, 2)).is_zero());
}

TEST_CASE("stratification sum equals the closed form") {
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 4; ++n) {
            Curve c = make_curve(g, n);
            CHECK(higgs_poincare_morse(c) == higgs_poincare_closed(c));
        }
}

TEST_CASE("Higgs polynomial properties") {
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 4; ++n) {
            IntPoly p = higgs_poincare_closed(make_curve(g, n));
            CHECK(p.nonnegative_coeffs());
            if (!p.is_zero()) CHECK(p.coeff(0) == 1);
            if (g >= 1 || n >= 3) CHECK(p.coeff(1) == 0);
        }
}

TEST_CASE("Euler characteristics by genus") {
    // Genus zero: (n-1)(n-2) 2^{n-4}.
    CHECK(euler_characteristic(make_curve(0, 3)) == 1);
    CHECK(euler_characteristic(make_curve(0, 4)) == 6);
    CHECK(euler_characteristic(make_curve(0, 5)) == 24);
    CHECK(euler_characteristic(make_curve(0, 8)) == 42 * 16);
    // Genus one: 3 * 2^n.
    CHECK(euler_characteristic(make_curve(1, 1)) == 6);
    CHECK(euler_characteristic(make_curve(1, 3)) == 24);
    CHECK(euler_characteristic(make_curve(1, 6)) == 192);
    // Genus two and up: zero.
    CHECK(euler_characteristic(make_curve(2, 1)) == 0);
    CHECK(euler_characteristic(make_curve(3, 4)) == 0);
    // It always equals the polynomial evaluated at -1.
    for (i64 g = 0; g <= 3; ++g)
        for (i64 n = (g == 0 ? 3 : 1); n <= 4; ++n) {
            Curve c = make_curve(g, n);
            CHECK(euler_characteristic(c) == higgs_poincare_closed(c).eval(BigInt(-1)));
        }
    // Genus zero with fewer than three points has no moduli to speak of.
    CHECK_THROWS_AS(euler_characteristic(make_curve(0, 2)), UsageError);
}

TEST_CASE("staircase polynomial identity") {
    IntPoly one = IntPoly::monomial(BigInt(1), 0);
    IntPoly t2 = IntPoly::t().pow(2);
    for (i64 n = 1; n <= 8; ++n) {
        IntPoly lhs = q_polynomial(n) * (one - t2) +
                      IntPoly::monomial(pow2(n - 1), static_cast<std::size_t>(2 * (n - 1)));
        CHECK(lhs == (one + t2).pow(n - 1));
    }
}

TEST_CASE("bundle moduli polynomial per chamber") {
    Curve c = make_curve(0, 3);
    // Fusion chamber: a single stable bundle.
    CHECK(parabolic_poincare(parse_weights(c, "1/8,1/8,1/8")).str() == "1");
    // Null chambers: empty moduli.
    CHECK(parabolic_poincare(reference_weights(c)).is_zero());
    CHECK(parabolic_poincare(parse_weights(c, "2/5,2/5,2/5")).is_zero());
    // Genus one: nonzero everywhere, and zero-degree coefficient one.
    IntPoly p12 = parabolic_poincare(parse_weights(make_curve(1, 2), "1/5,1/7"));
    CHECK(p12.coeff(0) == 1);
    CHECK(p12.nonnegative_coeffs());
    // Bundle polynomial plus weighted stratum sum recovers the Higgs one.
    WeightVector w = parse_weights(make_curve(1, 2), "1/5,1/7");
    CHECK(parabolic_poincare(w) + weighted_stratum_sum(w) ==
          higgs_poincare_closed(w.curve));
}

TEST_CASE("wall-crossing data on the four-point total-degree wall") {
    Curve c = make_curve(0, 4);
    Wall w{-1, make_evector(c, {0, 0, 0, 0})};
    WallcrossData x = wallcross_delta_check(w, c);
    // lambda = lambda_hat = 2 here, so the flip exchanges two P^0 fibers.
    CHECK(x.a_plus == 0);
    CHECK(x.a_minus == 0);
    CHECK(x.delta.is_zero());
}

TEST_CASE("wall-crossing data on a five-point wall with a genuine jump") {
    Curve c = make_curve(0, 5);
    Wall w{-1, make_evector(c, {0, 0, 0, 0, 0})};
    WallcrossData x = wallcross_delta_check(w, c);
    CHECK(x.a_plus == 1);  // lambda = 4
    CHECK(x.a_minus == 0); // lambda_hat = 2
    // delta = t^2 P_t(S^1 P^1) - t^4 P_t(S^0 P^1) = t^2 (1 + t^2) - t^4 = t^2.
    CHECK(x.delta.str() == "t^2");
    // The bundle moduli really jump by that amount across the wall.
    auto [plus, minus] = wall_side_samples(c, w);
    IntPoly diff_expected =
        projective_space_poincare(x.a_minus) - projective_space_poincare(x.a_plus);
    CHECK(parabolic_poincare(minus) - parabolic_poincare(plus) == diff_expected);
}

TEST_CASE("wall-crossing runs clean on every wall of the small curves") {
    for (auto [g, n] : std::vector<std::pair<i64, i64>>{{0, 4}, {0, 5}, {1, 2}, {2, 2}}) {
        Curve c = make_curve(g, n);
        for (const Wall& w : enumerate_walls(c)) CHECK_NOTHROW(wallcross_delta_check(w, c));
    }
    Curve c = make_curve(0, 4);
    CHECK_THROWS_AS(wallcross_delta_check(Wall{-5, make_evector(c, {0, 0, 0, 0})}, c),
                    UsageError);
}

TEST_CASE("bundled report is coherent") {
    WeightVector w = parse_weights(make_curve(1, 2), "1/5,1/7");
    PoincareReport r = poincare_report(w);
    CHECK(r.higgs_morse == r.higgs_closed);
    CHECK(r.euler == BigInt(12)); // 3 * 2^2
    CHECK(r.parabolic_by_chamber.size() == 1);
    CHECK(r.parabolic_by_chamber.count(chamber_of(w).key()) == 1);
}

} // TEST_SUITE
