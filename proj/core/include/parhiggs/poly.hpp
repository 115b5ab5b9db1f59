#ifndef PARHIGGS_POLY_HPP
#define PARHIGGS_POLY_HPP

#include <string>
#include <vector>

#include "parhiggs/numeric.hpp"

namespace parhiggs {

// Dense univariate polynomial in t with arbitrary-precision integer
// coefficients. Index = degree. Invariant: no trailing zero coefficient; the
// zero polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const BigInt& constant);
    IntPoly(i64 constant);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(const BigInt& coeff, std::size_t k);
    static IntPoly t(); // the variable itself

    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of t^k (zero past the degree).
    const BigInt& coeff(std::size_t k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& p);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly pow(i64 k) const;
    IntPoly shifted(std::size_t k) const; // multiply by t^k

    BigInt eval(const BigInt& x) const;

    bool nonnegative_coeffs() const;
    bool palindromic() const; // c_k == c_{deg-k}

    // Exact division: throws ConsistencyError("not_divisible") unless
    // den divides num in Z[t]. den must be nonzero.
    static IntPoly exact_div(const IntPoly& num, const IntPoly& den);

    // Human form, e.g. "1 + 5*t^2"; "0" for the zero polynomial.
    std::string str(std::string_view var = "t") const;
    // {"var":"t","coeffs":["1","0","5"]} with decimal-string coefficients.
    std::string json(std::string_view var = "t") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// P_t(P^m) = 1 + t^2 + ... + t^{2m}; m = -1 gives the zero polynomial
// (empty projective space).
IntPoly projective_space_poincare(i64 m);

// (1+t)^{2g}, the Poincare polynomial of a g-dimensional complex torus.
IntPoly jacobian_poincare(i64 g);

} // namespace parhiggs

#endif
