#include <doctest.h>

#include <stdexcept>

#include "butson/numtheory.hpp"

using namespace butson;

TEST_CASE("totient basics") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK(totient(200) == 80);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
}

TEST_CASE("divisors are sorted and complete") {
    CHECK(divisors(1) == std::vector<unsigned>{1});
    CHECK(divisors(20) == std::vector<unsigned>{1, 2, 4, 5, 10, 20});
    CHECK(divisors(48) == std::vector<unsigned>{1, 2, 3, 4, 6, 8, 12, 16, 24, 48});
}

TEST_CASE("lcm_checked") {
    CHECK(lcm_checked(4, 6) == 12);
    CHECK(lcm_checked(1, 1) == 1);
    CHECK_THROWS_AS(lcm_checked((1ull << 40) + 1, 1ull << 40), std::overflow_error);
}

TEST_CASE("largest order below a totient bound") {
    // phi(q) <= 8 admits q up to 30 (phi(30) = 8).
    CHECK(max_order_with_totient_at_most(8) == 30);
    CHECK(max_order_with_totient_at_most(1) == 2);
    CHECK(max_order_with_totient_at_most(2) == 6);
}

TEST_CASE("continued-fraction convergents recover exact fractions") {
    auto cs = convergents(1.0 / 3.0, 100);
    REQUIRE(!cs.empty());
    CHECK(cs.back().num == 1);
    CHECK(cs.back().den == 3);

    cs = convergents(17.0 / 24.0, 100);
    bool found = false;
    for (const auto& c : cs) found = found || (c.num == 17 && c.den == 24);
    CHECK(found);

    // 355/113 is the famous pi approximation; here test pi - 3 directly.
    cs = convergents(3.14159265358979323846 - 3.0, 113);
    REQUIRE(!cs.empty());
    CHECK(cs.back().num == 16);
    CHECK(cs.back().den == 113);
}
