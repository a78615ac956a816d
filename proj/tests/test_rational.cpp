#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gel/rational.hpp"

using gel::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
  // harmonic partial sum, no float drift over many terms
  Rational sum;
  for (int i = 1; i <= 40; ++i) sum = sum + Rational(1, i);
  CHECK(sum == Rational(2078178381193813, 485721041551200));
  CHECK(sum > Rational(4));
  CHECK(sum < Rational(5));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
  CHECK(Rational(7, 5) > Rational(4, 3));
  CHECK(Rational(1, 3) != Rational(2, 3));
}

TEST_CASE("overflow throws instead of wrapping") {
  Rational big(3037000500LL, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  Rational third(1, 3037000500LL);
  CHECK_THROWS_AS(third * third, std::overflow_error);
}

TEST_CASE("str and parse round trip") {
  CHECK(Rational(3, 7).str() == "3/7");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational::parse("3/7") == Rational(3, 7));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.1234567890123456789"),
                  std::invalid_argument);
}

TEST_CASE("helpers") {
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
}
