#include "parhiggs/stability.hpp"

#include <algorithm>

#include "parhiggs/errors.hpp"

namespace parhiggs {

std::string Decision::str() const {
    switch (tag) {
    case Tag::Yes: return "yes";
    case Tag::No: return "no";
    default: return "indeterminate";
    }
}

namespace {

Decision yes(std::string why) { return Decision{Decision::Tag::Yes, std::move(why)}; }
Decision no(std::string why) { return Decision{Decision::Tag::No, std::move(why)}; }
Decision indet(std::string why) {
    return Decision{Decision::Tag::Indeterminate, std::move(why)};
}

// The decisions compare h^0 of one line bundle against a threshold. When the
// degree alone pins the value down, `value` is exact; otherwise only the
// bounds max(0, deg+1-g) <= h^0 <= deg+1 are available.
struct CritValue {
    bool known = false;
    i64 value = 0;
    i64 lo = 0;
    i64 hi = 0;
    i64 degree = 0;
};

CritValue criterion_value(const SplitData& d, bool strong) {
    const Curve& c = d.weights.curve;
    const i64 g = c.genus;
    const i64 n = c.points;
    CritValue v;
    if (d.sub_eq_quot == true) {
        // Self-homs of a parabolic line are exactly O (parabolic) and O(-D)
        // (strong), so the criterion bundle is exactly K(D) resp. K.
        v.known = true;
        v.value = strong ? g : g - 1 + n;
        v.degree = strong ? 2 * g - 2 : 2 * g - 2 + n;
        return v;
    }
    std::vector<BigRat> bw = beta_all(d.weights, d.e);
    std::vector<BigRat> gw;
    gw.reserve(bw.size());
    for (const BigRat& b : bw)
        gw.push_back(BigRat(1) - b);
    ParLineData sub = make_par_line(c, d.deg_sub, std::move(bw));
    ParLineData quot = make_par_line(c, quot_degree(d), std::move(gw));
    v.degree = hom_twist_degree(sub, quot, strong, true, c);
    H0Result h = line_h0(c, v.degree);
    if (h.known) {
        v.known = true;
        v.value = h.value;
    } else {
        v.lo = std::max<i64>(0, v.degree + 1 - g);
        v.hi = v.degree + 1;
    }
    return v;
}

// Tri-state "h^0 >= k": 1 yes, 0 no, -1 undetermined by the degree.
int at_least(const CritValue& v, i64 k) {
    if (v.known) return v.value >= k ? 1 : 0;
    if (v.lo >= k) return 1;
    if (v.hi < k) return 0;
    return -1;
}

std::string h_text(const CritValue& v) {
    if (v.known)
        return "h = " + std::to_string(v.value) + " (degree " +
               std::to_string(v.degree) + ")";
    return "h in [" + std::to_string(v.lo) + "," + std::to_string(v.hi) +
           "] (degree " + std::to_string(v.degree) + ")";
}

std::string indet_text(const CritValue& v, const Curve& c) {
    return "h^0 of a degree-" + std::to_string(v.degree) +
           " line bundle on a genus-" + std::to_string(c.genus) +
           " curve depends on the bundle, not just its degree";
}

bool strictly_semistable(const SplitData& d) {
    if (d.sub_eq_quot == true) return true;
    return sub_pardeg(d) == 0;
}

} // namespace

SplitData make_split_data(WeightVector weights, i64 deg_sub, EVector e,
                          bool xi_zero, std::optional<bool> sub_eq_quot) {
    const i64 n = weights.curve.points;
    if (static_cast<i64>(e.bits.size()) != n)
        throw UsageError("bad_data", "intersection pattern has " +
                                         std::to_string(e.bits.size()) +
                                         " entries for " + std::to_string(n) +
                                         " marked points");
    for (auto b : e.bits)
        if (b > 1) throw UsageError("bad_data", "intersection pattern entries must be 0 or 1");
    SplitData d{std::move(weights), deg_sub, std::move(e), xi_zero, sub_eq_quot};
    if (sub_eq_quot != true && sub_pardeg(d) < 0)
        throw UsageError("bad_data",
                         "the sub-line has parabolic degree " + rat_string(sub_pardeg(d)) +
                             " < 0, so it is not a destabilizing or equal-slope sub-line");
    return d;
}

i64 quot_degree(const SplitData& d) { return -d.weights.curve.points - d.deg_sub; }

BigRat sub_pardeg(const SplitData& d) {
    return pardeg_sub(d.deg_sub, d.weights, d.e);
}

i64 colength(const SplitData& d) {
    return 2 * d.deg_sub + d.weights.curve.points + d.e.weight();
}

Decision exists_stable_pair(const SplitData& d) {
    const Curve& c = d.weights.curve;
    const i64 g = c.genus;
    const i64 n = c.points;
    const bool lm = d.sub_eq_quot.value_or(false);
    const bool ss = strictly_semistable(d);
    CritValue h = criterion_value(d, false);

    auto decide = [&]() -> Decision {
        switch (at_least(h, 1)) {
        case 1: return yes("a stabilizing deformation exists: " + h_text(h));
        case 0: return no("no stabilizing deformation: " + h_text(h));
        default: return indet(indet_text(h, c));
        }
    };

    if (!ss || !d.xi_zero) return decide();

    // Equal slopes and a split extension: the exceptional families.
    if (!d.sub_eq_quot.has_value() &&
        ((g == 0 && n == 2) || (g == 1 && n == 1)))
        throw UsageError("insufficient_data",
                         "equal-slope split data at genus " + std::to_string(g) + " with " +
                             std::to_string(n) +
                             " marked points: the answer depends on whether the sub and "
                             "quotient lines are isomorphic; set sub_eq_quot");
    if (lm && ((g == 0 && n == 2) || (g == 1 && n == 1)))
        return no("exceptional family: equal slopes with isomorphic sub and quotient at "
                  "genus " +
                  std::to_string(g) + ", " + std::to_string(n) +
                  " marked points admits no stable pair");
    if (!lm && g == 0 && colength(d) == 1)
        return no("exceptional family: genus 0, equal slopes, colength 1 admits no "
                  "stable pair");
    return decide();
}

Decision exists_stable_higgs(const SplitData& d) {
    const Curve& c = d.weights.curve;
    const i64 g = c.genus;
    const bool lm = d.sub_eq_quot.value_or(false);
    const bool ss = strictly_semistable(d);
    CritValue h = criterion_value(d, true);

    auto decide = [&]() -> Decision {
        if (d.xi_zero) {
            switch (at_least(h, 1)) {
            case 1:
                return yes("a stabilizing strongly parabolic field exists: " + h_text(h));
            case 0: return no("no stabilizing strongly parabolic field: " + h_text(h));
            default: return indet(indet_text(h, c));
            }
        }
        switch (at_least(h, 2)) {
        case 1:
            return yes("enough stabilizing fields to beat the nonzero extension class: " +
                       h_text(h));
        case 0:
            return no("the extension class is nonzero and " + h_text(h) +
                      " leaves no independent stabilizing field");
        default: return indet(indet_text(h, c));
        }
    };

    if (!ss || !d.xi_zero) return decide();

    if (!d.sub_eq_quot.has_value() && g == 1)
        throw UsageError("insufficient_data",
                         "equal-slope split data at genus 1: the answer depends on whether "
                         "the sub and quotient lines are isomorphic; set sub_eq_quot");
    if (lm && g == 1)
        return no("exceptional family: genus 1 equal-slope data with isomorphic sub and "
                  "quotient admits no stable strongly parabolic field");
    if (!lm && g == 0 && colength(d) <= 1)
        return no("exceptional family: genus 0, equal slopes, colength <= 1 admits no "
                  "stable strongly parabolic field");
    return decide();
}

Decision exists_semistable_pair(const SplitData& d) {
    if (strictly_semistable(d))
        return yes("the split bundle has equal slopes, so with the zero field it is "
                   "already a semistable pair");
    return exists_stable_pair(d);
}

Decision exists_semistable_higgs(const SplitData& d) {
    if (strictly_semistable(d))
        return yes("the split bundle has equal slopes, so with the zero field it is "
                   "already a semistable Higgs bundle");
    return exists_stable_higgs(d);
}

P1Classification p1_three_classify(const WeightVector& w) {
    const Curve& c = w.curve;
    if (c.genus != 0 || c.points != 3)
        throw UsageError("bad_curve",
                         "the three-point classification requires genus 0 and 3 marked points");

    static const std::vector<std::vector<std::uint8_t>> index_set = {
        {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};

    std::optional<EVector> positive;
    std::optional<EVector> zero;
    for (const auto& bits : index_set) {
        EVector e{bits};
        BigRat v = beta_sum(w, e) - BigRat(2 + e.weight(), 2); // sum beta - (1+|e|/2)
        if (v > 0) {
            if (positive || zero)
                throw ConsistencyError("identity_failure",
                                       "overlapping regions in the three-point cube");
            positive = e;
        } else if (v == 0) {
            if (positive || zero)
                throw ConsistencyError("identity_failure",
                                       "overlapping regions in the three-point cube");
            zero = e;
        }
    }

    P1Classification out;
    if (!positive && !zero) {
        out.region = P1Classification::Region::FusionChamber;
        out.label = "C_0";
        out.bundle_points = 1;
        out.bundle_iso_classes = 1;
        out.pair_points = 1;
        out.pair_iso_classes = 1;
        out.bundle_desc = "one stable parabolic bundle";
        out.pair_desc = "one stable pair: that bundle with the zero field";
        out.pair_space_desc = "pair parameter space C^5 with stable locus C^3";
        return out;
    }

    const EVector e = positive ? *positive : *zero;
    const i64 destab = -1 - e.weight() / 2;
    Wall wall{destab, e};
    if (wall.e.bits[0] == 1) wall = wall.partner(c.points);
    if (!is_vanishing_wall(wall, c))
        throw ConsistencyError("identity_failure",
                               "three-point wall " + wall.str() + " should vanish");

    out.e = e;
    out.wall = wall;
    out.destab_degree = destab;
    if (positive) {
        out.region = P1Classification::Region::TopChamber;
        out.label = "C_" + e.str();
        out.bundle_points = 0;
        out.bundle_iso_classes = 0;
        out.pair_points = 1;
        out.pair_iso_classes = 1;
        out.bundle_desc = "no stable bundles: every bundle has a destabilizing parabolic "
                          "sub-line of degree " +
                          std::to_string(destab);
        out.pair_desc = "one stable pair: the destabilized bundle with a field moving its "
                        "destabilizing line";
        out.pair_space_desc = "pair parameter space C^5 with stable locus C^3";
    } else {
        out.region = P1Classification::Region::OnWall;
        out.label = "H_" + e.str();
        out.bundle_points = 1;
        out.bundle_iso_classes = 2;
        out.pair_points = 1;
        out.pair_iso_classes = 3;
        out.bundle_desc = "one strictly semistable moduli point whose S-equivalence class "
                          "holds 2 isomorphism classes";
        out.pair_desc = "one strictly semistable moduli point holding 3 isomorphism "
                        "classes: the stable-side bundle with zero field, the destabilized "
                        "bundle with zero field, and the destabilized bundle with a "
                        "stabilizing field";
        out.pair_space_desc = "pair parameter space C^5; the strictly semistable locus has "
                              "three 4-dimensional components";
    }
    return out;
}

} // namespace parhiggs
