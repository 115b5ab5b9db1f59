#include "parhiggs/numeric.hpp"

#include "parhiggs/errors.hpp"

#include <cctype>

namespace parhiggs {

BigInt binom(i64 m, i64 k) {
    if (k < 0 || m < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    BigInt res = 1;
    for (i64 i = 0; i < k; ++i) {
        res *= (m - i);
        res /= (i + 1);
    }
    return res;
}

BigInt pow2(i64 k) {
    BigInt one = 1;
    return one << static_cast<unsigned>(k);
}

BigRat parse_rational(std::string_view s) {
    auto fail = [&](const std::string& why) -> BigRat {
        throw UsageError("bad_rational", "cannot parse '" + std::string(s) + "' as an exact rational: " + why);
    };
    if (s.empty()) return fail("empty string");
    if (s.find('.') != std::string_view::npos)
        return fail("decimal notation is not accepted, use p/q");

    auto parse_int = [&](std::string_view part) -> BigInt {
        std::size_t i = 0;
        bool neg = false;
        if (i < part.size() && (part[i] == '+' || part[i] == '-')) {
            neg = part[i] == '-';
            ++i;
        }
        if (i == part.size()) fail("missing digits");
        BigInt v = 0;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail("unexpected character");
            v = v * 10 + (part[i] - '0');
        }
        return neg ? -v : v;
    };

    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) fail("zero denominator");
    return BigRat(num, den);
}

std::string rat_string(const BigRat& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

bool is_integer(const BigRat& r) {
    return denominator(r) == 1;
}

i64 floor_i64(const BigRat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return static_cast<i64>(q);
}

i64 nth_prime(i64 i) {
    if (i < 1)
        throw UsageError("bad_index", "prime index must be >= 1");
    i64 count = 0;
    for (i64 cand = 2;; ++cand) {
        bool prime = true;
        for (i64 p = 2; p * p <= cand; ++p) {
            if (cand % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime && ++count == i)
            return cand;
    }
}

} // namespace parhiggs
