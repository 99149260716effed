#include <doctest.h>

#include <multizero/rational.hpp>

using multizero::Integer;
using multizero::Rational;

TEST_CASE("rational canonical form") {
    const Rational a(Integer(70), Integer(3));
    CHECK(a.num() == 70);
    CHECK(a.den() == 3);

    const Rational b(Integer(-6), Integer(-8));
    CHECK(b.num() == 3);
    CHECK(b.den() == 4);

    const Rational c(Integer(6), Integer(-8));
    CHECK(c.num() == -3);
    CHECK(c.den() == 4);

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1) / Rational(3) == third);
    CHECK(Rational(5, 3) * Rational(3, 5) == Rational(1));
    CHECK(Rational(7, 2) - Rational(1, 2) == Rational(3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational floor") {
    CHECK(Rational(70, 3).floor() == 23);
    CHECK(Rational(-1, 3).floor() == -1);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("rational ordering and printing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(1));
    CHECK(Rational(70, 3).str() == "70/3");
    CHECK(Rational(25).str() == "25");
    CHECK(Rational(25).is_integer());
    CHECK_FALSE(Rational(70, 3).is_integer());
}
