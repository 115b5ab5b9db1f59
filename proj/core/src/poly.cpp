#include "parhiggs/poly.hpp"

#include "parhiggs/errors.hpp"

#include <sstream>

namespace parhiggs {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(const BigInt& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(i64 constant) : IntPoly(BigInt(constant)) {}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::monomial(const BigInt& coeff, std::size_t k) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, kZero);
        p.c_[k] = coeff;
    }
    return p;
}

IntPoly IntPoly::t() {
    return monomial(1, 1);
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    IntPoly r = p;
    for (auto& x : r.c_) x *= s;
    return r;
}

IntPoly IntPoly::pow(i64 k) const {
    if (k < 0) throw ConsistencyError("negative_power", "polynomial powers must be nonnegative");
    IntPoly base = *this;
    IntPoly acc(1);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + k, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool IntPoly::nonnegative_coeffs() const {
    for (const auto& x : c_)
        if (x < 0) return false;
    return true;
}

bool IntPoly::palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
        if (c_[i] != c_[j]) return false;
    return true;
}

IntPoly IntPoly::exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero())
        throw ConsistencyError("divide_by_zero", "exact division by the zero polynomial");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree())
        throw ConsistencyError("not_divisible", "exact division with remainder: degree too small");

    std::vector<BigInt> rem = num.c_;
    std::vector<BigInt> quot(num.c_.size() - den.c_.size() + 1, kZero);
    const BigInt& lead = den.c_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + den.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw ConsistencyError("not_divisible", "exact division with remainder: leading coefficient");
        BigInt q = top / lead;
        quot[k] = q;
        for (std::size_t i = 0; i < den.c_.size(); ++i) rem[k + i] -= q * den.c_[i];
    }
    for (const auto& x : rem)
        if (x != 0)
            throw ConsistencyError("not_divisible", "exact division left a nonzero remainder");
    return IntPoly(std::move(quot));
}

std::string IntPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << '*';
            out << var;
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

std::string IntPoly::json(std::string_view var) const {
    std::ostringstream out;
    out << "{\"var\":\"" << var << "\",\"coeffs\":[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ',';
        out << '"' << c_[i].str() << '"';
    }
    out << "]}";
    return out.str();
}

IntPoly projective_space_poincare(i64 m) {
    if (m < 0) return IntPoly();
    std::vector<BigInt> c(2 * static_cast<std::size_t>(m) + 1, kZero);
    for (i64 k = 0; k <= m; ++k) c[2 * static_cast<std::size_t>(k)] = 1;
    return IntPoly(std::move(c));
}

IntPoly jacobian_poincare(i64 g) {
    IntPoly one_plus_t(std::vector<BigInt>{1, 1});
    return one_plus_t.pow(2 * g);
}

} // namespace parhiggs
