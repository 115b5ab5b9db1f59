#include "doctest.h"

#include "parhiggs/checks.hpp"
#include "parhiggs/errors.hpp"

using namespace parhiggs;

TEST_SUITE("checks") {

TEST_CASE("suite lookup") {
    CHECK(suite_criteria("euler") == std::vector<int>{2});
    CHECK(suite_criteria("wallcross") == std::vector<int>{5});
    CHECK(suite_criteria("consistency") == std::vector<int>{3, 4, 6, 9});
    CHECK(suite_criteria("all") == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(suite_criteria("bogus"), UsageError);
    CHECK_THROWS_AS(run_criterion(0), UsageError);
    CHECK_THROWS_AS(run_criterion(10), UsageError);
}

TEST_CASE("fast criteria pass with informative details") {
    CheckResult euler = run_criterion(2);
    CHECK(euler.criterion == 2);
    CHECK(euler.name == "euler-formulas");
    CHECK(euler.passed);
    CHECK_FALSE(euler.detail.empty());
    CheckResult macd = run_criterion(6);
    CHECK(macd.criterion == 6);
    CHECK(macd.name == "macdonald-oracle");
    CHECK(macd.passed);
}

TEST_CASE("suite runner preserves order and numbering") {
    std::vector<CheckResult> rs = run_suite("consistency", 2);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].criterion == 3);
    CHECK(rs[1].criterion == 4);
    CHECK(rs[2].criterion == 6);
    CHECK(rs[3].criterion == 9);
    for (const CheckResult& r : rs) CHECK(r.passed);
}

} // TEST_SUITE
