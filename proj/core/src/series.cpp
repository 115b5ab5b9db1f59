#include "parhiggs/series.hpp"

namespace parhiggs {

Series2 Series2::geometric(std::size_t order, const IntPoly& step) {
    Series2 s(order);
    IntPoly acc(1);
    for (std::size_t i = 0; i <= order; ++i) {
        s.c_[i] = acc;
        if (i < order) acc = acc * step;
    }
    return s;
}

Series2 Series2::one_plus_xt_pow(std::size_t order, i64 k) {
    Series2 s(order);
    for (std::size_t i = 0; i <= order; ++i)
        s.c_[i] = IntPoly::monomial(binom(k, static_cast<i64>(i)), i);
    return s;
}

Series2 Series2::operator*(const Series2& o) const {
    Series2 r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.c_.size() && j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

IntPoly macdonald_coeff(i64 h, i64 g) {
    if (h < 0) return IntPoly();
    auto order = static_cast<std::size_t>(h);
    Series2 prod = Series2::one_plus_xt_pow(order, 2 * g) *
                   Series2::geometric(order, IntPoly(1)) *
                   Series2::geometric(order, IntPoly::monomial(1, 2));
    return prod.coeff(order);
}

} // namespace parhiggs
