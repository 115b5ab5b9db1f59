#ifndef PARHIGGS_BETTI_HPP
#define PARHIGGS_BETTI_HPP

#include <map>
#include <string>

#include "parhiggs/arrangement.hpp"
#include "parhiggs/numeric.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/poly.hpp"

namespace parhiggs {

// P_t of the moduli of stable parabolic bundles in the reference chamber
// containing (1/3, 1/9, ..., 1/3^n):
//   (1+t^2)^{n-1} * [(1+t^3)^{2g} - t^{2g}(1+t)^{2g}] / (1-t^2)^2
// assembled with checked exact division. Zero for g = 0 (the reference
// chamber is then a null chamber).
IntPoly parabolic_reference_poincare(const Curve& c);

// P_t of the fixed-determinant parabolic Higgs moduli, assembled from the
// Morse stratification at the reference weights:
// parabolic_reference_poincare + weighted_stratum_sum(reference).
IntPoly higgs_poincare_morse(const Curve& c);

// The same polynomial from the closed form
//   P_t(M0) + S1 + S2 + 2^{n-1}(2^{2g}-1) t^{2(2g+n-2)} (1+t)^{2g-2}
// with
//   S1 = (Q_n(t) t^{2g} - (n-1) 2^{n-2} t^{2(2g+n-2)}) (1+t)^{2g} / (1-t^2)
//   S2 = 2^{n-1} (t^{2(g+n-1)} + t^{4g+2n-3}((2g-1)t - 2g)) (1+t)^{2g} / (1-t^2)^2
//   Q_n(t) = sum_{k=0}^{n-2} q_k t^{2k},  q_k = sum_{i<=k} C(n-1, i).
// Cross-validated against higgs_poincare_morse; a mismatch aborts.
IntPoly higgs_poincare_closed(const Curve& c);

// Q_n(t) as above (exposed for the identity Q_n(t)(1-t^2) + 2^{n-1}t^{2(n-1)}
// = (1+t^2)^{n-1}).
IntPoly q_polynomial(i64 n);

// Euler characteristic of the fixed-determinant Higgs moduli: the polynomial
// at t = -1, verified against the piecewise closed form
// (n-1)(n-2)2^{n-4} for g=0 (n >= 3), 3*2^n for g=1, 0 for g >= 2.
BigInt euler_characteristic(const Curve& c);

// P_t of the moduli of stable parabolic bundles in the chamber of w:
// higgs_poincare_morse - weighted_stratum_sum(w). Coefficients must be
// nonnegative; the result is zero exactly on null chambers (g = 0).
IntPoly parabolic_poincare(const WeightVector& w);

// Wall-crossing data across one wall. Crossing from the side where
// pardeg(wall.d, ., wall.e) > 0 to the other trades the stratum (d,e) for its
// partner; the strata are projective bundles over the critical submanifold
// with fiber exponents a_plus = lambda/2 - 1 and a_minus = lambda_hat/2 - 1.
// An exponent of -1 (empty fiber) happens exactly on vanishing walls.
struct WallcrossData {
    i64 a_plus = 0;   // fiber exponent on the pardeg > 0 side
    i64 a_minus = 0;  // fiber exponent on the pardeg < 0 side
    IntPoly delta;    // t^lambda_hat P_t(S^h_hat X) - t^lambda P_t(S^h X)
};

// Verifies two exact identities and returns the data:
//  (1) delta * (1 - t^2) = (t^lambda_hat - t^lambda) (1+t)^{2g};
//  (2) with sampled weights w+ / w- on the two sides,
//      parabolic_poincare(w-) - parabolic_poincare(w+)
//        = (P(P^{a_minus}) - P(P^{a_plus})) * (1+t)^{2g},
// where P(P^m) = 1 + t^2 + ... + t^{2m} and P(P^{-1}) = 0.
WallcrossData wallcross_delta_check(const Wall& wall, const Curve& c);

// Bundled report for one weight vector's chamber.
struct PoincareReport {
    IntPoly higgs_morse;
    IntPoly higgs_closed;
    std::map<std::string, IntPoly> parabolic_by_chamber; // key: ChamberID::key()
    BigInt euler;
};

PoincareReport poincare_report(const WeightVector& w);

} // namespace parhiggs

#endif
