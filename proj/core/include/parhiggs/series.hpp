#ifndef PARHIGGS_SERIES_HPP
#define PARHIGGS_SERIES_HPP

#include <vector>

#include "parhiggs/poly.hpp"

namespace parhiggs {

// Truncated power series in x whose coefficients are integer polynomials in t.
// The truncation order is fixed at construction; multiplication drops every
// term above x^order. Callers pick order = the coefficient they extract, so
// nothing is silently lost.
class Series2 {
public:
    explicit Series2(std::size_t order) : c_(order + 1) {}

    std::size_t order() const { return c_.size() - 1; }
    const IntPoly& coeff(std::size_t i) const { return c_[i]; }
    IntPoly& coeff(std::size_t i) { return c_[i]; }

    // 1/(1 - step*x) = sum_k step^k x^k. step = 1 gives 1/(1-x),
    // step = t^2 gives 1/(1-x t^2).
    static Series2 geometric(std::size_t order, const IntPoly& step);

    // (1 + x*t)^k expanded: coefficient of x^i is C(k,i) t^i.
    static Series2 one_plus_xt_pow(std::size_t order, i64 k);

    Series2 operator*(const Series2& o) const;

private:
    std::vector<IntPoly> c_;
};

// P_t(S^h X) for a compact genus-g curve X: the coefficient of x^h in
// (1+xt)^{2g} / ((1-x)(1-x t^2)). Zero polynomial for h < 0 (empty symmetric
// product), 1 for h = 0.
IntPoly macdonald_coeff(i64 h, i64 g);

} // namespace parhiggs

#endif
