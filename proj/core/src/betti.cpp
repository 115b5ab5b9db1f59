#include "parhiggs/betti.hpp"

#include "parhiggs/errors.hpp"
#include "parhiggs/morse.hpp"
#include "parhiggs/series.hpp"

namespace parhiggs {

IntPoly parabolic_reference_poincare(const Curve& c) {
    const i64 g = c.genus;
    const i64 n = c.points;
    IntPoly one_t2 = IntPoly(1) + IntPoly::monomial(1, 2);          // 1 + t^2
    IntPoly one_t3 = IntPoly(1) + IntPoly::monomial(1, 3);          // 1 + t^3
    IntPoly one_t = IntPoly(1) + IntPoly::t();                      // 1 + t
    IntPoly num = one_t2.pow(n - 1) *
                  (one_t3.pow(2 * g) - one_t.pow(2 * g).shifted(2 * g));
    IntPoly den = (IntPoly(1) - IntPoly::monomial(1, 2)).pow(2);    // (1 - t^2)^2
    return IntPoly::exact_div(num, den);
}

IntPoly higgs_poincare_morse(const Curve& c) {
    return parabolic_reference_poincare(c) +
           weighted_stratum_sum(reference_weights(c));
}

IntPoly q_polynomial(i64 n) {
    IntPoly q;
    BigInt partial = 0;
    for (i64 k = 0; k <= n - 2; ++k) {
        partial += binom(n - 1, k);
        q += IntPoly::monomial(partial, 2 * k);
    }
    return q;
}

IntPoly higgs_poincare_closed(const Curve& c) {
    const i64 g = c.genus;
    const i64 n = c.points;
    IntPoly one_t = IntPoly(1) + IntPoly::t();
    IntPoly one_minus_t2 = IntPoly(1) - IntPoly::monomial(1, 2);

    IntPoly m0 = parabolic_reference_poincare(c);

    // S1 = (Q_n(t) t^{2g} - (n-1)2^{n-2} t^{2(2g+n-2)}) (1+t)^{2g} / (1-t^2)
    BigInt tail = n >= 2 ? BigInt((n - 1)) * pow2(n - 2) : BigInt(0);
    IntPoly s1num = q_polynomial(n).shifted(2 * g) -
                    IntPoly::monomial(tail, 2 * (2 * g + n - 2));
    IntPoly s1 = IntPoly::exact_div(s1num * one_t.pow(2 * g), one_minus_t2);

    // S2 = 2^{n-1}(t^{2(g+n-1)} + t^{4g+2n-3}((2g-1)t - 2g)) (1+t)^{2g} / (1-t^2)^2,
    // an empty sum (zero) when g = 0.
    IntPoly s2;
    if (g >= 1) {
        IntPoly inner = IntPoly::monomial(1, 2 * (g + n - 1)) +
                        (IntPoly::monomial(2 * g - 1, 1) - IntPoly(2 * g))
                            .shifted(4 * g + 2 * n - 3);
        s2 = IntPoly::exact_div(IntPoly(pow2(n - 1)) * inner * one_t.pow(2 * g),
                                one_minus_t2.pow(2));
    }

    // Covering correction 2^{n-1}(2^{2g}-1) t^{2(2g+n-2)} (1+t)^{2g-2}; zero at g = 0.
    IntPoly corr;
    if (g >= 1)
        corr = IntPoly::monomial(pow2(n - 1) * (pow2(2 * g) - 1), 2 * (2 * g + n - 2)) *
               one_t.pow(2 * g - 2);

    IntPoly total = m0 + s1 + s2 + corr;
    IntPoly morse = higgs_poincare_morse(c);
    if (total != morse)
        throw ConsistencyError("mismatch_with_morse",
                               "closed form " + total.str() +
                                   " differs from the stratification sum " + morse.str() +
                                   " at genus " + std::to_string(c.genus) + ", " +
                                   std::to_string(c.points) + " points");
    return total;
}

BigInt euler_characteristic(const Curve& c) {
    const i64 g = c.genus;
    const i64 n = c.points;
    if (g == 0 && n < 3)
        throw UsageError("bad_curve",
                         "Euler characteristic at genus 0 requires at least 3 marked points");
    BigInt value = higgs_poincare_morse(c).eval(BigInt(-1));
    BigRat expected;
    if (g == 0)
        expected = BigRat(BigInt(n - 1) * (n - 2), 1) * BigRat(pow2(n), 16);
    else if (g == 1)
        expected = BigRat(3 * pow2(n), 1);
    else
        expected = 0;
    if (BigRat(value, 1) != expected)
        throw ConsistencyError("formula_mismatch",
                               "polynomial evaluation gives " + value.str() +
                                   " but the closed form gives " + rat_string(expected));
    return value;
}

IntPoly parabolic_poincare(const WeightVector& w) {
    IntPoly p = higgs_poincare_morse(w.curve) - weighted_stratum_sum(w);
    if (!p.nonnegative_coeffs())
        throw ConsistencyError("negative_coefficient",
                               "chamber polynomial " + p.str() +
                                   " has a negative coefficient");
    if (w.curve.genus == 0 && w.curve.points >= 3) {
        bool zero = p == IntPoly();
        if (zero != is_null_chamber(w))
            throw ConsistencyError("identity_failure",
                                   zero ? "chamber polynomial vanishes off a null chamber"
                                        : "nonzero chamber polynomial on a null chamber");
    }
    return p;
}

WallcrossData wallcross_delta_check(const Wall& wall, const Curve& c) {
    const i64 g = c.genus;
    const i64 n = c.points;
    const i64 ew = wall.ew();
    if (static_cast<i64>(wall.e.bits.size()) != n || wall.e.bits[0] != 0 ||
        !(ew < -2 * wall.d && -2 * wall.d < n + ew))
        throw UsageError("bad_wall",
                         "wall " + wall.str() + " is not a canonical wall of this curve");

    const i64 lambda = 2 * (n + 2 * wall.d + g - 1 + ew);
    const i64 h = 2 * g - 2 - 2 * wall.d - ew;
    const i64 lambda_hat = 2 * (g - 1 - 2 * wall.d - ew);
    const i64 h_hat = 2 * g - 2 + n + 2 * wall.d + ew;

    WallcrossData data;
    data.a_plus = lambda / 2 - 1;
    data.a_minus = lambda_hat / 2 - 1;
    data.delta = macdonald_coeff(h_hat, g).shifted(lambda_hat) -
                 macdonald_coeff(h, g).shifted(lambda);

    // (1) the index identity, checked multiplicatively to avoid division.
    IntPoly one_minus_t2 = IntPoly(1) - IntPoly::monomial(1, 2);
    IntPoly jac = jacobian_poincare(g);
    IntPoly rhs = (IntPoly::monomial(1, lambda_hat) - IntPoly::monomial(1, lambda)) * jac;
    if (data.delta * one_minus_t2 != rhs)
        throw ConsistencyError("identity_failure",
                               "index identity fails on wall " + wall.str());

    // (2) the projective-bundle delta on sampled weights from the two sides.
    auto [wp, wm] = wall_side_samples(c, wall);
    IntPoly lhs = parabolic_poincare(wm) - parabolic_poincare(wp);
    IntPoly fiber = (projective_space_poincare(data.a_minus) -
                     projective_space_poincare(data.a_plus)) *
                    jac;
    if (lhs != fiber)
        throw ConsistencyError("identity_failure",
                               "projective-bundle delta fails on wall " + wall.str() +
                                   ": chamber difference " + lhs.str() +
                                   " vs fiber difference " + fiber.str());
    return data;
}

PoincareReport poincare_report(const WeightVector& w) {
    PoincareReport rep;
    rep.higgs_morse = higgs_poincare_morse(w.curve);
    rep.higgs_closed = higgs_poincare_closed(w.curve);
    rep.parabolic_by_chamber[chamber_of(w).key()] = parabolic_poincare(w);
    rep.euler = rep.higgs_morse.eval(BigInt(-1));
    if (w.curve.genus >= 1 || w.curve.points >= 3)
        euler_characteristic(w.curve); // formula tripwire
    return rep;
}

} // namespace parhiggs
