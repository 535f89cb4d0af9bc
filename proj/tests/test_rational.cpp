#include <doctest.h>

#include <stdexcept>

#include "oimc/rational.hpp"

using oimc::Rational;

TEST_CASE("decimal literals parse to exact fractions") {
  CHECK(Rational::parse("0.2") == Rational(1, 5));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("1.0") == Rational(1));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("0.6") == Rational(3, 5));
}

TEST_CASE("fraction and integer literals") {
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK(Rational::parse("7/7") == Rational(1));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0x2"), std::invalid_argument);
}

TEST_CASE("canonical form: lowest terms, positive denominator") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("comparisons distinguish equal-to-one from close-to-one") {
  Rational almost(999999999, 1000000000);
  CHECK(almost < Rational(1));
  CHECK(almost + Rational(1, 1000000000) == Rational(1));
  CHECK(Rational(1, 3) < Rational(34, 100));
}

TEST_CASE("powers stay exact at large exponents") {
  Rational p = oimc::pow(Rational(1, 2), 100);
  CHECK(p * oimc::pow(Rational(2), 100) == Rational(1));
  CHECK(p.sign() > 0);
}
