#include "normsurf/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace normsurf;

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    const Rational q(-6, 4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    const Rational r(3, -9);
    CHECK(numerator(r) == -1);
    CHECK(denominator(r) == 3);
}

TEST_CASE("wire format round-trip") {
    CHECK(rational_to_string(Rational(19, 4)) == "19/4");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
    CHECK(rational_to_string(Rational(0)) == "0");

    CHECK(parse_rational("19/4") == Rational(19, 4));
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("6/4") == Rational(3, 2));

    for (const char* text : {"19/4", "-3/2", "5", "0", "-1000000000000000000000/7"}) {
        CHECK(rational_to_string(parse_rational(text)) == text);
    }
}

TEST_CASE("parser rejects anything inexact") {
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("- 1"), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(ceil_rational(Rational(7, 2)) == 4);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(ceil_rational(Rational(-7, 2)) == -3);
    CHECK(floor_rational(Rational(6)) == 6);
    CHECK(ceil_rational(Rational(6)) == 6);
    CHECK(floor_rational(Rational(-6)) == -6);
    CHECK(ceil_rational(Rational(0)) == 0);
    CHECK(ceil_rational(Rational(1, 1000000)) == 1);
    CHECK(floor_rational(Rational(-1, 1000000)) == -1);
}

TEST_CASE("is_integer") {
    CHECK(is_integer(Rational(4, 2)));
    CHECK(!is_integer(Rational(1, 2)));
    CHECK(is_integer(Rational(0)));
}
