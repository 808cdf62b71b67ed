#include "doctest.h"

#include "gvkit/rational.hpp"

using gvkit::Error;
using gvkit::ErrorKind;
using gvkit::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("3/4").to_string() == "3/4");
  CHECK(Rational::from_string("-7").to_string() == "-7");
  CHECK(Rational::from_string("0").to_string() == "0");
  CHECK(Rational::from_string("2/4").to_string() == "1/2");
  CHECK(Rational::from_string("-10/4").to_string() == "-5/2");
  // big values survive exactly (numerator chosen coprime to 7)
  const char* big = "123456789012345678901234567891/7";
  CHECK(Rational::from_string(big).to_string() == big);
}

TEST_CASE("malformed strings are schema errors") {
  for (const char* s : {"", "1.5", "a", "1/", "/2", "1/2/3", "1 /2", "+",
                        "0x10", "1e3"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(Rational::from_string(s), Error);
  }
  try {
    Rational::from_string("1/0");
    FAIL("zero denominator accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);

  Rational acc(0);
  for (int i = 1; i <= 10; ++i) acc += Rational(1, i);
  CHECK(acc == Rational(7381, 2520));  // H_10
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow_int(2) == Rational(4, 9));
  CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
  CHECK(Rational(5).pow_int(0) == Rational(1));
  CHECK(Rational(2).pow_int(100).to_string() ==
        "1267650600228229401496703205376");
  CHECK_THROWS_AS(Rational(0).pow_int(-1), Error);
}

TEST_CASE("predicates and ordering") {
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(3).sign() == 1);
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(-1, 2));
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("numerator and denominator") {
  Rational r(-6, 8);
  CHECK(r.numerator() == gvkit::Integer(-3));
  CHECK(r.denominator() == gvkit::Integer(4));
  CHECK(r.to_double() == doctest::Approx(-0.75));
}
