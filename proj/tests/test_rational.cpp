#include <catch2/catch_amalgamated.hpp>

#include "chainspec/rational.hpp"

using chainspec::Rational;

TEST_CASE("rational normalization") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, 4) == Rational(-1, 2));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(-2, -4) == Rational(1, 2));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE(Rational(0, 7).den() == 1);
    REQUIRE_THROWS_AS(Rational(1, 0), chainspec::numeric_domain);
}

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 6), b(1, 3);
    REQUIRE(a + b == Rational(1, 2));
    REQUIRE(b - a == Rational(1, 6));
    REQUIRE(a * b == Rational(1, 18));
    REQUIRE(a / b == Rational(1, 2));
    REQUIRE(-b == Rational(-1, 3));
    REQUIRE(Rational(90, 7) * Rational(7, 90) == Rational(1));
    REQUIRE_THROWS_AS(a / Rational(0), chainspec::numeric_domain);
}

TEST_CASE("rational comparisons") {
    REQUIRE(Rational(90, 7) > Rational(48, 5));
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(1, 3));
    REQUIRE(Rational(5) >= Rational(5));
    REQUIRE(chainspec::max(Rational(90, 7), Rational(48, 5)) == Rational(90, 7));
    REQUIRE(chainspec::min(Rational(90, 7), Rational(48, 5)) == Rational(48, 5));
}

TEST_CASE("rational text form") {
    REQUIRE(Rational(90, 7).str() == "90/7");
    REQUIRE(Rational(8).str() == "8");
    REQUIRE(Rational(16, 2).str() == "8");
    REQUIRE(Rational(-3, 7).str() == "-3/7");
    REQUIRE(Rational(90, 7).to_double() == Catch::Approx(12.857142857142858));
}

TEST_CASE("rational overflow is a domain error") {
    Rational big(INT64_MAX / 2, 1);
    REQUIRE_THROWS_AS(big * Rational(5), chainspec::numeric_domain);
    // Reduction can rescue large intermediates.
    REQUIRE((Rational(INT64_MAX / 3, 2) * Rational(2, INT64_MAX / 3)) == Rational(1));
}
