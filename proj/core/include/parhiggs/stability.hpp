#ifndef PARHIGGS_STABILITY_HPP
#define PARHIGGS_STABILITY_HPP

#include <optional>
#include <string>

#include "parhiggs/arrangement.hpp"
#include "parhiggs/numeric.hpp"
#include "parhiggs/parabolic.hpp"

namespace parhiggs {

// Outcome of a decision procedure. Indeterminate means the answer genuinely
// depends on moduli the input does not carry (e.g. whether a degree-0 line
// bundle on a positive-genus curve is trivial), never that the procedure
// gave up.
struct Decision {
    enum class Tag { Yes, No, Indeterminate };
    Tag tag = Tag::Indeterminate;
    std::string reason;

    bool yes() const { return tag == Tag::Yes; }
    bool no() const { return tag == Tag::No; }
    bool indeterminate() const { return tag == Tag::Indeterminate; }
    std::string str() const;
};

// A split rank-2 bundle E = L + M with L a parabolic sub-line of degree
// deg_sub meeting the flags in pattern e, and M the quotient line (degree
// -n - deg_sub, weights 1 - beta). xi_zero records whether the extension
// class of 0 -> L -> E -> M -> 0 vanishes (split data has xi = 0; a
// nonsplit extension with the same graded has xi != 0).
//
// sub_eq_quot: whether L and M are isomorphic as parabolic line bundles.
// That configuration needs equal weights on sub and quotient, which the
// strict weight model excludes, so setting it to true switches the
// procedure to exact self-hom cohomology and ignores deg_sub and e.
// Leave it unset when unknown; the few decisions that hinge on it then
// fail with UsageError("insufficient_data") instead of guessing.
struct SplitData {
    WeightVector weights;
    i64 deg_sub = 0;
    EVector e;
    bool xi_zero = true;
    std::optional<bool> sub_eq_quot;
};

// Validates: e matches the curve, and (unless sub_eq_quot is true) L has
// nonnegative parabolic degree, i.e. L is a maximal destabilizing or
// equal-slope sub-line. Weights may lie on walls here; only the chamber
// operations require genericity.
SplitData make_split_data(WeightVector weights, i64 deg_sub, EVector e,
                          bool xi_zero,
                          std::optional<bool> sub_eq_quot = std::nullopt);

i64 quot_degree(const SplitData& d);   // -n - deg_sub
BigRat sub_pardeg(const SplitData& d); // deg_sub + beta_sum
// Colength c = 2 deg_sub + n + |e|; strictly semistable data has 0 < c < n.
i64 colength(const SplitData& d);

// Does a stable K(D) pair (E', phi) exist whose bundle E' deforms the given
// split/extension data? And the Higgs analogue (strongly parabolic phi).
Decision exists_stable_pair(const SplitData& d);
Decision exists_stable_higgs(const SplitData& d);

// Semistable variants: equal-slope data already is semistable with the zero
// field; unstable data reduces to the stable question.
Decision exists_semistable_pair(const SplitData& d);
Decision exists_semistable_higgs(const SplitData& d);

// Complete classification of the weight cube at genus 0 with 3 marked
// points. The cube splits into the central chamber C_0 (fusion rules hold),
// four top chambers C_e indexed by e in {(0,0,0),(0,1,1),(1,0,1),(1,1,0)}
// (every bundle destabilized by a line of degree -1-|e|/2), and the four
// walls H_e between them. No two walls meet inside the cube.
struct P1Classification {
    enum class Region { FusionChamber, TopChamber, OnWall };
    Region region = Region::FusionChamber;
    std::string label;                 // "C_0", "C_(0,1,1)", "H_(1,0,1)"
    std::optional<EVector> e;          // set off the central chamber
    std::optional<Wall> wall;          // canonical wall label when on a wall
    std::optional<i64> destab_degree;  // -1-|e|/2 when e is set

    // Point and isomorphism-class counts for the two moduli spaces:
    // parabolic bundles, then K(D) pairs up to isomorphism.
    i64 bundle_points = 0;
    i64 bundle_iso_classes = 0;
    i64 pair_points = 0;
    i64 pair_iso_classes = 0;

    std::string bundle_desc;
    std::string pair_desc;
    std::string pair_space_desc;
};

P1Classification p1_three_classify(const WeightVector& w);

} // namespace parhiggs

#endif
