#include <catch2/catch_amalgamated.hpp>

#include "hk/rational.hpp"

using namespace hk;

TEST_CASE("rationals are always reduced with positive denominator") {
    Rational r(6, -4);
    REQUIRE(r.num() == -3);
    REQUIRE(r.den() == 2);
    REQUIRE(Rational(0, 5) == Rational(0));
    REQUIRE_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(39, 20), b(1, 20);
    REQUIRE(a + b == Rational(2));
    REQUIRE(a - b == Rational(19, 10));
    REQUIRE(a * Rational(20) == Rational(39));
    REQUIRE(a / b == Rational(39));
    REQUIRE(-a == Rational(-39, 20));
    REQUIRE_THROWS_AS(a / Rational(0), domain_error);
    Rational c = a;
    c += b;
    REQUIRE(c == Rational(2));
}

TEST_CASE("comparisons use exact cross products") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 3) > Rational(-1, 2));
    REQUIRE(Rational(2) >= Rational(2));
    REQUIRE(Rational(7, 3) > 2);
    REQUIRE(Rational(7, 3) < 3);
}

TEST_CASE("integer extraction names the offending value") {
    REQUIRE(Rational(8, 4).is_integer());
    REQUIRE(Rational(8, 4).as_integer() == 2);
    REQUIRE_FALSE(Rational(39, 20).is_integer());
    REQUIRE_THROWS_AS(Rational(39, 20).as_integer(), consistency_error);
    REQUIRE_THROWS_WITH(Rational(39, 20).as_integer(), Catch::Matchers::ContainsSubstring("39/20"));
}

TEST_CASE("sign and printing") {
    REQUIRE(Rational(-5, 3).sign() == -1);
    REQUIRE(Rational(0).sign() == 0);
    REQUIRE(Rational(5, 3).sign() == 1);
    REQUIRE(Rational(39, 20).str() == "39/20");
    REQUIRE(Rational(4, 2).str() == "2");
}

TEST_CASE("intermediates larger than 64 bits reduce back down") {
    // (2^40 / 3) * (3 / 2^40) = 1 with 80-bit products in between
    Rational big(1099511627776LL, 3);
    Rational inv(3, 1099511627776LL);
    REQUIRE(big * inv == Rational(1));
    // unrepresentable results must throw rather than wrap
    Rational huge(INT64_MAX, 1);
    REQUIRE_THROWS_AS(huge * huge, overflow_error);
}
