#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rquant/rational.hpp"

using rquant::Rational;

TEST(Rational, ReducesToLowestTerms) {
  EXPECT_EQ(Rational(6, 8).str(), "3/4");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
}

TEST(Rational, ParseAcceptsCanonicalForms) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("1/4"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW((void)Rational::parse(""), std::invalid_argument);
  EXPECT_THROW((void)Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW((void)Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW((void)Rational::parse("1/2/3"), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
  EXPECT_THROW((void)rquant::inverse(Rational(0)), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
}

TEST(Rational, BigValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 80; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 80; ++i) x /= Rational(3, 2);
  EXPECT_TRUE(x.is_one());
}

// (a/b + c/d) against (ad + cb)/(bd) computed in machine integers, and the
// product against (ac)/(bd). Small operands so the oracle cannot overflow.
TEST(RationalProperty, CrossMultiplicationOracle) {
  rquant::testing::Gen gen(20261016);
  for (int trial = 0; trial < 2000; ++trial) {
    const long a = gen.integer(-50, 50), b = gen.integer(1, 40);
    const long c = gen.integer(-50, 50), d = gen.integer(1, 40);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ((x + y).str(), Rational(a * d + c * b, b * d).str());
    EXPECT_EQ((x - y).str(), Rational(a * d - c * b, b * d).str());
    EXPECT_EQ((x * y).str(), Rational(a * c, b * d).str());
    if (c != 0) EXPECT_EQ((x / y).str(), Rational(a * d, b * c).str());
  }
}
