#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rquant/catalog.hpp"
#include "rquant/series.hpp"

using rquant::HSeries;
using rquant::Op2;
using rquant::Poly;
using rquant::Rational;

namespace {

HSeries theta_zero(const HSeries& s) { return rquant::substitute_params(s, std::map<std::string, Rational>{{"theta", 0}}); }

}  // namespace

TEST(Series, MultiplyByOne) {
  const HSeries a = rquant::example2(4);
  EXPECT_EQ(a * HSeries::identity(3, 4), a);
  EXPECT_EQ(HSeries::identity(3, 4) * a, a);
}

TEST(Series, ArithmeticTruncatesToShorterOperand) {
  const HSeries a = rquant::example1(5), b = rquant::example1(2);
  EXPECT_EQ((a + b).order(), 2u);
  EXPECT_EQ((a * b).order(), 2u);
  EXPECT_THROW((void)(rquant::example1(2) + rquant::example2(3)), std::invalid_argument);
}

TEST(Series, ExampleOneSquaredAtThetaZero) {
  const HSeries a = theta_zero(rquant::example1(2));
  EXPECT_EQ(a * a, HSeries::identity(2, 2));
}

// (P + h r)^2 at h^1 is P r + r P; expanded by hand through the index sum.
TEST(Series, FirstOrderOfSquare) {
  const HSeries a = rquant::example1(2).truncated(1);
  const Op2& p = a.coeff(0);
  const Op2& r = a.coeff(1);
  const Op2 expected = rquant::testing::index_sum_compose(p, r) + rquant::testing::index_sum_compose(r, p);
  EXPECT_EQ((a * a).coeff(1), expected);
}

TEST(Series, InverseOfPermutation) {
  const HSeries p = HSeries::constant(rquant::permutation_P(3), 3);
  EXPECT_EQ(rquant::series_inverse(p), p);
}

TEST(Series, ExampleOneIsItsOwnInverseAtThetaZero) {
  const HSeries a = theta_zero(rquant::example1(2));
  EXPECT_EQ(rquant::series_inverse(a), a);
}

TEST(Series, ExampleOneMultiplyBack) {
  const HSeries a = rquant::example1(4);
  const HSeries inv = rquant::series_inverse(a);
  EXPECT_EQ(a * inv, HSeries::identity(2, 4));
  EXPECT_EQ(inv * a, HSeries::identity(2, 4));
}

TEST(Series, SingularLeadingCoefficientThrows) {
  EXPECT_THROW((void)rquant::series_inverse(HSeries::constant(Op2(2), 2)), std::domain_error);
}

TEST(Series, MirrorOfPermutation) {
  const HSeries p = HSeries::constant(rquant::permutation_P(2), 3);
  EXPECT_EQ(rquant::mirror(p), p);
}

TEST(Series, MirrorOfExampleOneNegatesHAndTheta) {
  const HSeries a = rquant::example1(4);
  const HSeries expected = rquant::substitute_params(rquant::substitute_h_negation(a),
                                                     std::map<std::string, Poly>{{"theta", -Poly::variable("theta")}});
  EXPECT_EQ(rquant::mirror(a), expected);
}

TEST(Series, MirrorOfExampleTwoNegatesH) {
  const HSeries a = rquant::example2(6);
  EXPECT_EQ(rquant::mirror(a), rquant::substitute_h_negation(a));
}

TEST(Series, DoubleHNegationIsIdentity) {
  const HSeries a = rquant::example2(5);
  EXPECT_EQ(rquant::substitute_h_negation(rquant::substitute_h_negation(a)), a);
}

TEST(Series, ExampleOneThetaZeroHasNoSecondOrderEntry) {
  EXPECT_TRUE(theta_zero(rquant::example1(2)).coeff(2).at(1, 1, 0, 0).is_zero());
}

// h-negation flips exactly the odd-order entries: compare entry lists.
TEST(Series, HNegationFlipsOddEntriesOfExampleTwo) {
  const HSeries a = rquant::example2(3);
  const HSeries b = rquant::substitute_h_negation(a);
  std::size_t flipped = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l) {
            const Poly& x = a.coeff(n).at(i, j, k, l);
            const Poly& y = b.coeff(n).at(i, j, k, l);
            if (n % 2 == 1) {
              EXPECT_EQ(y, -x);
              if (!x.is_zero()) ++flipped;
            } else {
              EXPECT_EQ(y, x);
            }
          }
  }
  // eight h^1 entries and four h^3 entries
  EXPECT_EQ(flipped, 12u);
}

TEST(SeriesProperty, InverseMultiplyBack) {
  rquant::testing::Gen gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t order = static_cast<std::size_t>(gen.integer(1, 4));
    const HSeries a = gen.unipotent_series(d, order, gen.chance(0.5));
    const HSeries inv = rquant::series_inverse(a);
    EXPECT_EQ(a * inv, HSeries::identity(d, order));
    EXPECT_EQ(inv * a, HSeries::identity(d, order));
  }
}

TEST(SeriesProperty, MirrorIsAnInvolution) {
  rquant::testing::Gen gen(37);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const HSeries a = gen.unipotent_series(d, static_cast<std::size_t>(gen.integer(1, 4)));
    EXPECT_EQ(rquant::mirror(rquant::mirror(a)), a);
  }
  const HSeries e1 = rquant::example1(4);
  EXPECT_EQ(rquant::mirror(rquant::mirror(e1)), e1);
}

TEST(SeriesProperty, TruncationCoherence) {
  rquant::testing::Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const HSeries a = gen.unipotent_series(2, 5), b = gen.unipotent_series(2, 5);
    for (std::size_t m = 1; m < 5; ++m) {
      EXPECT_EQ((a * b).truncated(m), a.truncated(m) * b.truncated(m));
      EXPECT_EQ(rquant::series_inverse(a).truncated(m), rquant::series_inverse(a.truncated(m)));
      EXPECT_EQ(rquant::mirror(a).truncated(m), rquant::mirror(a.truncated(m)));
    }
  }
}

TEST(Series, HDegree) {
  EXPECT_EQ(rquant::example1(6).h_degree(), 2u);
  EXPECT_EQ(rquant::example2(6).h_degree(), 3u);
  EXPECT_EQ(rquant::example1(2).extended(5).order(), 5u);
}
