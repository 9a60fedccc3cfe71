#include <catch2/catch_amalgamated.hpp>

#include "am/rational.hpp"

using am::parse_rational;
using am::Rational;
using am::to_decimal_string;
using am::to_fraction_string;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-4/13") == Rational(-4, 13));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.35") == Rational(7, 20));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(parse_rational(" 8/20 ") == Rational(2, 5));
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("decimal rendering uses 12 significant digits") {
  CHECK(to_decimal_string(Rational(0)) == "0");
  CHECK(to_decimal_string(Rational(1)) == "1");
  CHECK(to_decimal_string(Rational(1, 2)) == "0.5");
  CHECK(to_decimal_string(Rational(25, 32)) == "0.78125");
  CHECK(to_decimal_string(Rational(4, 13)) == "0.307692307692");
  CHECK(to_decimal_string(Rational(9, 13)) == "0.692307692308");
  CHECK(to_decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(to_decimal_string(Rational(2, 3)) == "0.666666666667");
  CHECK(to_decimal_string(Rational(1, 1024)) == "0.0009765625");
  CHECK(to_decimal_string(Rational(-9, 13)) == "-0.692307692308");
  CHECK(to_decimal_string(Rational(1000000)) == "1000000");
  CHECK(to_decimal_string(Rational(103, 45)) == "2.28888888889");
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal_string(Rational(1, 8), 2) == "0.12");
  CHECK(to_decimal_string(Rational(3, 8), 2) == "0.38");
  CHECK(to_decimal_string(Rational(15, 100), 1) == "0.2");
  CHECK(to_decimal_string(Rational(25, 100), 1) == "0.2");
  CHECK(to_decimal_string(Rational(35, 100), 1) == "0.4");
  // carry into a new leading digit
  CHECK(to_decimal_string(Rational(995, 1000), 2) == "1");
  CHECK(to_decimal_string(Rational(999, 1000), 2) == "1");
}

TEST_CASE("fraction rendering") {
  CHECK(to_fraction_string(Rational(4, 13)) == "4/13");
  CHECK(to_fraction_string(Rational(2)) == "2");
  CHECK(to_fraction_string(Rational(0)) == "0");
  CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("ipow") {
  CHECK(am::ipow(am::BigInt(2), 20) == 1048576);
  CHECK(am::ipow(am::BigInt(10), 0) == 1);
  CHECK(am::ipow(am::BigInt(0), 0) == 1);
  CHECK(am::ipow(am::BigInt(0), 3) == 0);
}
