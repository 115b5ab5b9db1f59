#ifndef PARHIGGS_PARABOLIC_HPP
#define PARHIGGS_PARABOLIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parhiggs/numeric.hpp"

namespace parhiggs {

// A smooth projective curve of genus g with n >= 1 distinct marked points.
// Bundles are rank 2 with a full flag at every marked point and weights
// (alpha_i, 1 - alpha_i); the parabolic degree of the full bundle is
// normalized to 0, so its ordinary degree is -n.
struct Curve {
    i64 genus = 0;
    i64 points = 1;
};

Curve make_curve(i64 genus, i64 points); // validates g >= 0, n >= 1

// Generic weight data: one rational alpha_i in the open interval (0, 1/2)
// per marked point.
struct WeightVector {
    Curve curve;
    std::vector<BigRat> alpha;
};

WeightVector make_weights(const Curve& c, std::vector<BigRat> alpha);

// Parses "1/3,1/9,1/27". Fractions in (1/2,1) are normalized to 1-alpha;
// 0, 1/2, 1, values outside (0,1), and decimal notation are rejected.
WeightVector parse_weights(const Curve& c, std::string_view csv);

// Intersection pattern of a line subbundle with the flags:
// e_i = dim L_{p_i} ∩ F_2(p_i) in {0,1}.
struct EVector {
    std::vector<std::uint8_t> bits;

    i64 weight() const; // |e| = sum of bits
    EVector complement() const; // 1 - e
    std::string str() const; // "(0,1,1)"
};

EVector make_evector(const Curve& c, std::vector<std::uint8_t> bits);
EVector parse_evector(const Curve& c, std::string_view csv);

// beta_i = e_i + (-1)^{e_i} alpha_i, the weight the line subbundle inherits.
BigRat beta(const WeightVector& w, const EVector& e, std::size_t i);
std::vector<BigRat> beta_all(const WeightVector& w, const EVector& e);
BigRat beta_sum(const WeightVector& w, const EVector& e);

// Parabolic degree of a line subbundle with underlying degree d and
// intersection pattern e: d + sum_i beta_i.
BigRat pardeg_sub(i64 d, const WeightVector& w, const EVector& e);

// A standalone parabolic line bundle: underlying degree plus one weight in
// [0,1) per marked point. Used by the hom-degree dictionary, which also
// serves weight patterns with ties that WeightVector excludes.
struct ParLineData {
    i64 deg = 0;
    std::vector<BigRat> wt;
};

ParLineData make_par_line(const Curve& c, i64 deg, std::vector<BigRat> wt);

// Degree of the ordinary line bundle whose sections are the (strongly)
// parabolic homomorphisms a -> b, optionally twisted by K(D):
//   deg b - deg a - #{i : a_i > b_i}              (parabolic)
//   deg b - deg a - #{i : a_i >= b_i}             (strong)
// plus 2g-2+n when k_twist is set.
i64 hom_twist_degree(const ParLineData& a, const ParLineData& b,
                     bool strong, bool k_twist, const Curve& c);

// h^0 of a degree-deg line bundle when degree alone decides it. For g >= 2
// and 0 <= deg <= 2g-2 the count depends on the bundle, not just the degree,
// and the result is Indeterminate. For g = 1, deg = 0 the caller may pass
// is_trivial_hint.
struct H0Result {
    bool known = false;
    i64 value = 0;  // valid when known
    i64 degree = 0; // echoed for diagnostics
    std::string reason; // set when indeterminate
};

H0Result line_h0(const Curve& c, i64 deg, std::optional<bool> is_trivial_hint = std::nullopt);

// Complex dimensions of the four moduli spaces for rank 2 and full flags:
// parabolic bundles M, K(D) pairs P, Higgs N, fixed-determinant Higgs N0.
struct ModuliDims {
    i64 parabolic = 0;
    i64 pairs = 0;
    i64 higgs = 0;
    i64 higgs_fixed_det = 0;
};

ModuliDims dims(const Curve& c);

// Reference weights (1/3, 1/9, ..., 1/3^n); generic for every n.
WeightVector reference_weights(const Curve& c);

} // namespace parhiggs

#endif
