#include <stdexcept>
#include <random>

#include "doctest.h"
#include "rsp/numerals.hpp"

using namespace rsp;

TEST_SUITE_BEGIN("numerals");

TEST_CASE("to_digits on known expansions") {
    CHECK(to_digits(47, 10) == Digits{4, 7});
    CHECK(to_digits(61, 18) == Digits{3, 7});
    CHECK(to_digits(0, 7) == Digits{0});
    CHECK(to_digits(1787, 16) == Digits{6, 15, 11});
    CHECK_THROWS_AS(to_digits(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(to_digits(5, 0), std::invalid_argument);
}

TEST_CASE("from_digits evaluates the expansion") {
    CHECK(from_digits({4, 9, 7}, 10) == 497);
    CHECK(from_digits({0, 0, 5}, 10) == 5);
    Value expected = 0;
    for (int d : {2, 4, 8, 3, 13, 8}) expected = expected * 18 + static_cast<Value>(d);
    CHECK(from_digits({2, 4, 8, 3, 13, 8}, 18) == expected);
    CHECK_THROWS_AS(from_digits({10}, 10), std::invalid_argument);
    CHECK_THROWS_AS(from_digits({-1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(from_digits({}, 10), std::invalid_argument);
}

TEST_CASE("render uses the alphanumeric alphabet through base 36") {
    CHECK(render({6, 11}, 16) == "6B");
    CHECK(render({13, 8}, 18) == "D8");
    CHECK(render({0}, 10) == "0");
    CHECK(render({35}, 36) == "Z");
}

TEST_CASE("render uses decimal tuples above base 36") {
    CHECK(render({1, 31}, 150) == "(1,31)");
    CHECK(render({31}, 150) == "(31)");
    CHECK(render({0}, 100) == "(0)");
}

TEST_CASE("parse accepts both render formats") {
    CHECK(parse("6FB", 16) == Digits{6, 15, 11});
    CHECK(parse("24", 10) == Digits{2, 4});
    CHECK(parse("(31)", 150) == Digits{31});
    CHECK(parse("(31,)", 150) == Digits{31});  // trailing comma tolerated
    CHECK(parse("(1,31)", 150) == Digits{1, 31});
    CHECK(parse("d8", 18) == Digits{13, 8});
    CHECK_THROWS_AS(parse("G", 16), std::invalid_argument);
    CHECK_THROWS_AS(parse("", 10), std::invalid_argument);
    CHECK_THROWS_AS(parse("(1,", 150), std::invalid_argument);
    CHECK_THROWS_AS(parse("(1,x)", 150), std::invalid_argument);
    CHECK_THROWS_AS(parse("(200)", 150), std::invalid_argument);
    CHECK_THROWS_AS(parse("31", 150), std::invalid_argument);
}

TEST_CASE("value round trip, dense small bases") {
    for (int base : {2, 10, 16, 36}) {
        for (Value n = 0; n < 20000; ++n) CHECK(from_digits(to_digits(n, base), base) == n);
    }
}

TEST_CASE("value and text round trips, sampled") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> base_dist(2, 256);
    std::uniform_int_distribution<long long> n_dist(0, 999999);
    for (int i = 0; i < 20000; ++i) {
        int base = base_dist(rng);
        Value n = static_cast<Value>(n_dist(rng));
        Digits d = to_digits(n, base);
        CHECK(from_digits(d, base) == n);
        CHECK(parse(render(d, base), base) == d);
    }
}

TEST_CASE("digit count equals floor(log) + 1") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> base_dist(2, 256);
    std::uniform_int_distribution<long long> n_dist(1, 999999);
    for (int i = 0; i < 5000; ++i) {
        int base = base_dist(rng);
        Value n = static_cast<Value>(n_dist(rng));
        // independent count: the largest k with base^k <= n
        int k = 0;
        Value power = 1;
        while (power <= n / static_cast<Value>(base)) {
            power *= static_cast<Value>(base);
            ++k;
        }
        CHECK(static_cast<int>(to_digits(n, base).size()) == k + 1);
        CHECK(digit_count(n, base) == k + 1);
    }
}

TEST_CASE("overflow in from_digits is reported") {
    Digits big(40, 9);  // 40 nines in base 10 exceeds 128 bits
    CHECK_THROWS_AS(from_digits(big, 10), std::overflow_error);
}

TEST_CASE("Numeral::of carries a consistent expansion") {
    Numeral n = Numeral::of(497, 10);
    CHECK(n.value == 497);
    CHECK(n.base == 10);
    CHECK(n.digits == Digits{4, 9, 7});
    CHECK(Numeral::of(0, 2).digits == Digits{0});
}

TEST_CASE("value_to_string matches decimal rendering") {
    CHECK(value_to_string(0) == "0");
    CHECK(value_to_string(497) == "497");
    Value big = from_digits(Digits(25, 9), 10);
    CHECK(value_to_string(big) == std::string(25, '9'));
}

TEST_SUITE_END();
