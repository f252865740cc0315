#include <doctest.h>

#include <limits>
#include <sstream>

#include "carter/rational.hpp"

using carter::Rational;

TEST_CASE("values are kept in lowest terms") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("arithmetic") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK((Rational(5, 4) + Rational(3, 4)) == Rational(2));
}

TEST_CASE("ordering by cross multiplication") {
  CHECK(Rational(5, 4) < Rational(2));
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(Rational(7, 4) > Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("5/4") == Rational(5, 4));
  CHECK(Rational::parse(" -3 ") == Rational(-3));
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4).str() == "-4");
  std::ostringstream os;
  os << Rational(7, 4);
  CHECK(os.str() == "7/4");
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}
