#include "doctest.h"

#include "parhiggs/errors.hpp"
#include "parhiggs/morse.hpp"

using namespace parhiggs;

TEST_SUITE("morse") {

TEST_CASE("reference three-point chamber has a single index-zero stratum") {
    WeightVector w = reference_weights(make_curve(0, 3));
    std::vector<Stratum> strata = enumerate_strata(w);
    REQUIRE(strata.size() == 1);
    const Stratum& s = strata[0];
    CHECK(s.d == -2);
    CHECK(s.e.str() == "(0,1,1)");
    CHECK(s.lambda == 0);
    CHECK(s.h == 0);
    CHECK(s.critical_value == BigRat(5, 27)); // -2 + 1/3 + 8/9 + 26/27
    CHECK(stratum_poincare(s, w.curve).str() == "1");
    CHECK(weighted_stratum_sum(w).str() == "1");
}

TEST_CASE("fusion chamber at three points has no strata at all") {
    Curve c = make_curve(0, 3);
    WeightVector w = parse_weights(c, "1/8,1/8,1/8");
    CHECK(enumerate_strata(w).empty());
    CHECK(weighted_stratum_sum(w).is_zero());
}

TEST_CASE("one-point genus-one stratum") {
    Curve c = make_curve(1, 1);
    WeightVector w = parse_weights(c, "1/4");
    std::vector<Stratum> strata = enumerate_strata(w);
    REQUIRE(strata.size() == 1);
    const Stratum& s = strata[0];
    CHECK(s.d == 0);
    CHECK(s.e.str() == "(0)");
    CHECK(s.lambda == 2);
    CHECK(s.h == 0);
    CHECK(s.critical_value == BigRat(1, 4));
    // (2^{2g} - 1) C(2g-2, h) t^h + P_t(S^h X) = 3*1 + 1 = 4.
    CHECK(stratum_poincare(s, c).str() == "4");
    CHECK(weighted_stratum_sum(w).str() == "4*t^2");
}

TEST_CASE("strata are sorted by critical value, then degree, then pattern") {
    Curve c = make_curve(1, 3);
    WeightVector w = parse_weights(c, "1/5,1/7,1/11");
    std::vector<Stratum> strata = enumerate_strata(w);
    CHECK(strata.size() >= 2);
    for (std::size_t i = 1; i < strata.size(); ++i) {
        const Stratum& a = strata[i - 1];
        const Stratum& b = strata[i];
        bool ordered = a.critical_value < b.critical_value ||
                       (a.critical_value == b.critical_value &&
                        (a.d < b.d || (a.d == b.d && a.e.bits < b.e.bits)));
        CHECK(ordered);
    }
    for (const Stratum& s : strata) {
        CHECK(s.critical_value > 0);
        CHECK(s.lambda == 2 * (3 + 2 * s.d + 1 - 1 + s.e.weight()));
        CHECK(s.h == 2 * 1 - 2 - 2 * s.d - s.e.weight());
        CHECK(s.h >= 0);
        CHECK(s.lambda >= 2); // index zero never occurs at genus >= 1
    }
}

TEST_CASE("weights on a wall are rejected as non-generic") {
    Curve c = make_curve(0, 3);
    CHECK_THROWS_AS(enumerate_strata(parse_weights(c, "1/3,1/3,1/3")), NonGenericError);
    CHECK_THROWS_AS(enumerate_strata(parse_weights(c, "1/3,1/4,1/12")), NonGenericError);
}

TEST_CASE("minimum stratum: genus zero only, present exactly on null chambers") {
    Curve c = make_curve(0, 3);
    CHECK_FALSE(minimum_stratum(parse_weights(c, "1/8,1/8,1/8")).has_value());
    auto min = minimum_stratum(reference_weights(c));
    REQUIRE(min.has_value());
    CHECK(min->lambda == 0);
    CHECK(min->h == 0); // h = n - 3 at three points
    Curve c5 = make_curve(0, 5);
    auto min5 = minimum_stratum(reference_weights(c5));
    REQUIRE(min5.has_value());
    CHECK(min5->lambda == 0);
    CHECK(min5->h == 2);
    CHECK_THROWS_AS(minimum_stratum(parse_weights(make_curve(1, 1), "1/4")), UsageError);
}

} // TEST_SUITE
