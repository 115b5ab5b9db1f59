#include "parhiggs/parabolic.hpp"

#include <sstream>

#include "parhiggs/errors.hpp"

namespace parhiggs {

Curve make_curve(i64 genus, i64 points) {
    if (genus < 0)
        throw UsageError("bad_curve", "genus must be >= 0");
    if (points < 1)
        throw UsageError("bad_curve", "number of marked points must be >= 1");
    return Curve{genus, points};
}

WeightVector make_weights(const Curve& c, std::vector<BigRat> alpha) {
    if (static_cast<i64>(alpha.size()) != c.points)
        throw UsageError("bad_weights", "expected one weight per marked point");
    const BigRat half(1, 2);
    for (const BigRat& a : alpha) {
        if (a <= 0 || a >= half)
            throw UsageError("bad_weights",
                             "each weight must lie strictly between 0 and 1/2 "
                             "(weights in (1/2,1) are accepted by the parser and "
                             "normalized to 1-alpha)");
    }
    return WeightVector{c, std::move(alpha)};
}

WeightVector parse_weights(const Curve& c, std::string_view csv) {
    std::vector<BigRat> alpha;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        BigRat a = parse_rational(tok);
        const BigRat half(1, 2);
        if (a <= 0 || a >= 1 || a == half)
            throw UsageError("bad_weights",
                             "weights must lie in (0,1) and avoid 1/2; got " + rat_string(a));
        if (a > half)
            a = 1 - a; // the flag's two weights are (alpha, 1-alpha); use the small one
        alpha.push_back(std::move(a));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return make_weights(c, std::move(alpha));
}

i64 EVector::weight() const {
    i64 s = 0;
    for (auto b : bits)
        s += b;
    return s;
}

EVector EVector::complement() const {
    EVector out;
    out.bits.reserve(bits.size());
    for (auto b : bits)
        out.bits.push_back(static_cast<std::uint8_t>(1 - b));
    return out;
}

std::string EVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i)
            s += ',';
        s += static_cast<char>('0' + bits[i]);
    }
    s += ')';
    return s;
}

EVector make_evector(const Curve& c, std::vector<std::uint8_t> bits) {
    if (static_cast<i64>(bits.size()) != c.points)
        throw UsageError("bad_evector", "expected one flag bit per marked point");
    for (auto b : bits)
        if (b != 0 && b != 1)
            throw UsageError("bad_evector", "flag bits must be 0 or 1");
    return EVector{std::move(bits)};
}

EVector parse_evector(const Curve& c, std::string_view csv) {
    std::vector<std::uint8_t> bits;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok == "0")
            bits.push_back(0);
        else if (tok == "1")
            bits.push_back(1);
        else
            throw UsageError("bad_evector", "flag bits must be 0 or 1");
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return make_evector(c, std::move(bits));
}

BigRat beta(const WeightVector& w, const EVector& e, std::size_t i) {
    if (i >= e.bits.size() || e.bits.size() != w.alpha.size())
        throw UsageError("bad_evector", "weight/flag size mismatch");
    return e.bits[i] ? BigRat(1) - w.alpha[i] : w.alpha[i];
}

std::vector<BigRat> beta_all(const WeightVector& w, const EVector& e) {
    std::vector<BigRat> out;
    out.reserve(w.alpha.size());
    for (std::size_t i = 0; i < w.alpha.size(); ++i)
        out.push_back(beta(w, e, i));
    return out;
}

BigRat beta_sum(const WeightVector& w, const EVector& e) {
    BigRat s(0);
    for (std::size_t i = 0; i < w.alpha.size(); ++i)
        s += beta(w, e, i);
    return s;
}

BigRat pardeg_sub(i64 d, const WeightVector& w, const EVector& e) {
    return BigRat(d) + beta_sum(w, e);
}

ParLineData make_par_line(const Curve& c, i64 deg, std::vector<BigRat> wt) {
    if (static_cast<i64>(wt.size()) != c.points)
        throw UsageError("bad_weights", "expected one weight per marked point");
    for (const BigRat& a : wt)
        if (a < 0 || a >= 1)
            throw UsageError("bad_weights", "line-bundle weights must lie in [0,1)");
    return ParLineData{deg, std::move(wt)};
}

i64 hom_twist_degree(const ParLineData& a, const ParLineData& b,
                     bool strong, bool k_twist, const Curve& c) {
    if (a.wt.size() != b.wt.size() || static_cast<i64>(a.wt.size()) != c.points)
        throw UsageError("bad_weights", "weight vectors must match the marked points");
    i64 drop = 0;
    for (std::size_t i = 0; i < a.wt.size(); ++i) {
        if (strong ? (a.wt[i] >= b.wt[i]) : (a.wt[i] > b.wt[i]))
            ++drop;
    }
    i64 deg = b.deg - a.deg - drop;
    if (k_twist)
        deg += 2 * c.genus - 2 + c.points;
    return deg;
}

H0Result line_h0(const Curve& c, i64 deg, std::optional<bool> is_trivial_hint) {
    H0Result r;
    r.degree = deg;
    if (deg < 0) {
        r.known = true;
        r.value = 0;
        return r;
    }
    if (c.genus == 0) {
        r.known = true;
        r.value = deg + 1;
        return r;
    }
    if (deg > 2 * c.genus - 2) {
        r.known = true;
        r.value = deg + 1 - c.genus; // Riemann-Roch with vanishing h^1
        return r;
    }
    if (c.genus == 1 && deg == 0) {
        if (is_trivial_hint.has_value()) {
            r.known = true;
            r.value = *is_trivial_hint ? 1 : 0;
            return r;
        }
        r.reason = "degree-0 bundle on a genus-1 curve: h^0 depends on triviality";
        return r;
    }
    r.reason = "h^0 in degree range [0, 2g-2] depends on the bundle, not just its degree";
    return r;
}

ModuliDims dims(const Curve& c) {
    const i64 g = c.genus;
    const i64 n = c.points;
    ModuliDims d;
    d.parabolic = 4 * (g - 1) + 1 + n;
    d.pairs = 4 * (2 * g - 2 + n) + 1;
    d.higgs = 8 * (g - 1) + 2 + 2 * n;
    d.higgs_fixed_det = 6 * (g - 1) + 2 * n;
    return d;
}

WeightVector reference_weights(const Curve& c) {
    std::vector<BigRat> alpha;
    alpha.reserve(static_cast<std::size_t>(c.points));
    BigInt denom = 3;
    for (i64 i = 0; i < c.points; ++i) {
        alpha.emplace_back(BigInt(1), denom);
        denom *= 3;
    }
    return make_weights(c, std::move(alpha));
}

} // namespace parhiggs
