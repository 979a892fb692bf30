#include <cmath>

#include "doctest.h"
#include "qtwist/numerics.hpp"
#include "random_rationals.hpp"

using namespace qtwist;

TEST_CASE("rational literals") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/8").str() == "-1/2");
  CHECK(Rational::parse("0.99") == Rational(99, 100));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1+2i"), Error);
  CHECK(Rational(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rational powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(ipow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), Error);
}

TEST_CASE("q_bracket") {
  CHECK(q_bracket(2, Rational(1, 2)) == Rational(3, 2));
  CHECK(q_bracket(5, Rational(1), QLimit::allow) == Rational(5));
  CHECK(q_bracket(0, Rational(1, 7)) == Rational(0));
  CHECK(q_bracket(0, Rational(-3)) == Rational(0));

  SUBCASE("q = 1 needs the limit flag") {
    try {
      q_bracket(3, Rational(1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::division_by_zero);
    }
  }

  SUBCASE("floating branch rules") {
    CHECK(std::abs(q_bracket(Real(2), Complex(0.5)) - Complex(1.5)) < 1e-18);
    CHECK(std::abs(q_bracket(Real(2.5), Complex(0.25)) - Complex((1 - std::pow(0.25L, 2.5L)) / 0.75L)) < 1e-18);
    // integer x with a negative or complex q is unambiguous
    CHECK(std::abs(q_bracket(Real(3), Complex(0, 1)) - (Complex(1) + Complex(0, 1) + Complex(-1))) < 1e-18);
    try {
      q_bracket(Real(0.5), Complex(-0.5));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::branch_ambiguity);
    }
    CHECK(q_bracket(Real(4), Complex(1), QLimit::allow) == Complex(4));
  }
}

TEST_CASE("q_bracket addition law") {
  testing::RationalGenerator gen;
  for (int trial = 0; trial < 200; ++trial) {
    Rational q = gen.nonzero(9, 7);
    if (q == Rational(1)) continue;
    const long x = gen.integer(0, 25);
    const long y = gen.integer(0, 25);
    CHECK(q_bracket(x + y, q) == q_bracket(x, q) + ipow(q, x) * q_bracket(y, q));
  }
}

TEST_CASE("q_bracket limit branch is the identity at q = 1") {
  for (long n = 0; n <= 50; ++n) {
    CHECK(q_bracket(n, Rational(1), QLimit::allow) == Rational(n));
  }
}

TEST_CASE("two_bracket") {
  CHECK(two_bracket(Rational(1)) == Rational(2));
  CHECK(two_bracket(Rational(1, 2)) == Rational(3, 2));
  CHECK(two_bracket(Rational(0)) == Rational(1));
}

TEST_CASE("binomials") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(7, 0) == 1);
  for (unsigned long n = 1; n <= 60; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
  }
  CHECK(neg_binom_coeff(0, 1) == 1);
  CHECK(neg_binom_coeff(0, 5) == 1);
  CHECK(neg_binom_coeff(3, 1) == 1);
  CHECK(neg_binom_coeff(2, 3) == 6);
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(Rational(9, 2), 3) == Valuation(2));
  CHECK(padic_valuation(Rational(1, 3), 3) == Valuation(-1));
  CHECK(padic_valuation(Rational(0), 5).is_infinite());
  CHECK(padic_valuation(Rational(-50, 7), 5) == Valuation(2));
  CHECK(Valuation(100) < Valuation::infinity());
  CHECK_THROWS_AS(padic_valuation(Rational(3), 4), Error);
  CHECK_THROWS_AS(padic_valuation(Rational(3), 2), Error);

  SUBCASE("additive on products") {
    testing::RationalGenerator gen(7);
    for (int trial = 0; trial < 300; ++trial) {
      const Rational a = gen.nonzero(500, 300);
      const Rational b = gen.nonzero(500, 300);
      for (long p : {3L, 5L, 7L}) {
        CHECK(padic_valuation(a * b, p).value() ==
              padic_valuation(a, p).value() + padic_valuation(b, p).value());
      }
    }
  }
}
