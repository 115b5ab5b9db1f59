#include "doctest.h"

#include "parhiggs/errors.hpp"
#include "parhiggs/numeric.hpp"

using namespace parhiggs;

TEST_SUITE("numeric") {

TEST_CASE("binomial coefficients with out-of-range zeros") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(6, 3) == 20);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(4, 4) == 1);
    CHECK(binom(4, 5) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(3, -1) == 0);
    // Pascal rule on a block.
    for (i64 m = 1; m <= 20; ++m)
        for (i64 k = 0; k <= m; ++k)
            CHECK(binom(m, k) == binom(m - 1, k - 1) + binom(m - 1, k));
    CHECK(binom(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("powers of two") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(1) == 2);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(100) == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("rational parsing round-trips and stays reduced") {
    CHECK(parse_rational("1/3") == BigRat(1, 3));
    CHECK(parse_rational("-2/4") == BigRat(-1, 2));
    CHECK(parse_rational("7") == BigRat(7));
    CHECK(rat_string(parse_rational("10/15")) == "2/3");
    CHECK(rat_string(BigRat(5)) == "5");
    CHECK(rat_string(BigRat(-3, 9)) == "-1/3");
}

TEST_CASE("rational parsing rejects decimals and malformed input") {
    CHECK_THROWS_AS(parse_rational("0.5"), UsageError);
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(parse_rational("one"), UsageError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), UsageError);
}

TEST_CASE("integrality and floors") {
    CHECK(is_integer(BigRat(4, 2)));
    CHECK_FALSE(is_integer(BigRat(1, 3)));
    CHECK(floor_i64(BigRat(7, 2)) == 3);
    CHECK(floor_i64(BigRat(-7, 2)) == -4);
    CHECK(floor_i64(BigRat(6, 2)) == 3);
    CHECK(floor_i64(BigRat(0)) == 0);
}

TEST_CASE("prime sequence used for perturbations") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(2) == 3);
    CHECK(nth_prime(3) == 5);
    CHECK(nth_prime(10) == 29);
    CHECK(nth_prime(25) == 97);
}

} // TEST_SUITE
