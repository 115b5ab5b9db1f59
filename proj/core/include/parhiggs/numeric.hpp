#ifndef PARHIGGS_NUMERIC_HPP
#define PARHIGGS_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace parhiggs {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced, denominator > 0 (maintained by the backend).
using BigRat = boost::multiprecision::cpp_rational;

using i64 = std::int64_t;

// Binomial coefficient with the out-of-range zero convention:
// C(m,k) = 0 whenever k < 0, m < 0, or k > m.
BigInt binom(i64 m, i64 k);

BigInt pow2(i64 k); // 2^k, k >= 0

// Parses "p", "-p", or "p/q" (q > 0 after normalization). Decimal notation is
// rejected: weights must be exact. Throws UsageError.
BigRat parse_rational(std::string_view s);

// "p" or "p/q" in lowest terms.
std::string rat_string(const BigRat& r);

bool is_integer(const BigRat& r);

// Floor of a rational as a BigInt-free i64 (values here are tiny).
i64 floor_i64(const BigRat& r);

// The i-th prime, 1-indexed: nth_prime(1) = 2, nth_prime(2) = 3, ...
// Used for deterministic perturbations and jitter directions.
i64 nth_prime(i64 i);

} // namespace parhiggs

#endif
