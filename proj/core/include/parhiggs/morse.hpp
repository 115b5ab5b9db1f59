#ifndef PARHIGGS_MORSE_HPP
#define PARHIGGS_MORSE_HPP

#include <optional>
#include <vector>

#include "parhiggs/numeric.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/poly.hpp"

namespace parhiggs {

// A critical stratum of the circle-action Morse function on the moduli of
// rank-2 parabolic Higgs bundles with fixed determinant. Each stratum is
// labeled by the degree d and flag-intersection pattern e of the invariant
// line subbundle; it is a 2^{2g}-cover of the symmetric product S^h(X).
struct Stratum {
    i64 d = 0;
    EVector e;
    i64 lambda = 0;          // Morse index: 2(n + 2d + g - 1 + |e|), even, >= 0
    i64 h = 0;               // symmetric-product exponent: 2g - 2 - 2d - |e| >= 0
    BigRat critical_value;   // d + beta_sum > 0
};

// All (d,e) with e over {0,1}^n and -beta_sum < d <= g - 1 - |e|/2, sorted by
// (critical value, d, e lexicographic). Throws NonGenericError if the weights
// lie on a wall (some beta_sum is an integer).
std::vector<Stratum> enumerate_strata(const WeightVector& w);

// P_t of one stratum: (2^{2g} - 1) * C(2g-2, h) * t^h + P_t(S^h X).
IntPoly stratum_poincare(const Stratum& s, const Curve& c);

// Sum of t^lambda * stratum_poincare over enumerate_strata(w).
IntPoly weighted_stratum_sum(const WeightVector& w);

// g = 0 only: the unique index-zero stratum when the moduli of stable
// parabolic bundles is empty (then h = n - 3), absent otherwise.
std::optional<Stratum> minimum_stratum(const WeightVector& w);

} // namespace parhiggs

#endif
