#include <doctest.h>

#include <limits>

#include "rankone/rational.hpp"

using rankone::ArithmeticOverflow;
using rankone::Rational;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == 0);
  CHECK(Rational(1, 3) * 3 == 1);
  CHECK(Rational(1, 2) / Rational(1, 4) == 2);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("11/2") == Rational(11, 2));
  CHECK(Rational::parse("-4") == -4);
  CHECK(Rational(11, 2).str() == "11/2");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("overflow is reported, never rounded") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + 1, ArithmeticOverflow);
  CHECK_THROWS_AS(big * 2, ArithmeticOverflow);
  CHECK_THROWS(Rational(1, 2).to_integer());
}
