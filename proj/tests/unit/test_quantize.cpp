#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rquant/catalog.hpp"
#include "rquant/quantize.hpp"

using rquant::ClassicalR;
using rquant::Constraint;
using rquant::ConstraintSet;
using rquant::HSeries;
using rquant::Op2;
using rquant::Op3;
using rquant::Poly;
using rquant::QuantizationResult;
using rquant::Rational;

namespace {

ClassicalR example1_limit() { return rquant::classical_limit(rquant::example1()).r; }
ClassicalR example2_limit() { return rquant::classical_limit(rquant::example2()).r; }

HSeries theta_zero(const HSeries& s) { return rquant::substitute_params(s, std::map<std::string, Rational>{{"theta", 0}}); }

std::map<std::string, Rational> all_zero(const QuantizationResult& q) {
  std::map<std::string, Rational> out;
  for (const auto& p : q.parameters()) out[p] = 0;
  return out;
}

void expect_constraints_hold(const QuantizationResult& q) {
  ASSERT_TRUE(q.obstruction_free());
  EXPECT_TRUE(rquant::braid_residual(q.series).is_zero);
  if (q.constraints.involution) {
    EXPECT_TRUE(rquant::involution_residual(q.series).is_zero);
  }
  if (q.constraints.mirror) {
    EXPECT_TRUE(rquant::mirror_residual(q.series).is_zero);
  }
}

// Row order of the constraint blocks: cell(out, in), out-major.
std::vector<Rational> flatten(const Op2& a) {
  std::vector<Rational> out;
  const std::size_t side = a.dim() * a.dim();
  for (std::size_t o = 0; o < side; ++o)
    for (std::size_t i = 0; i < side; ++i) out.push_back(*a.cell(o, i).constant_value());
  return out;
}

std::vector<Rational> column(const rquant::RationalMatrix& m, std::size_t c) {
  std::vector<Rational> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.at(r, c));
  return out;
}

}  // namespace

TEST(Quantize, ZeroRStaysAtPermutation) {
  for (const ConstraintSet cs : {ConstraintSet{}, ConstraintSet{true, false, false}, ConstraintSet{true, true, false}}) {
    const auto q = rquant::quantize(ClassicalR{Op2(2)}, 4, cs);
    EXPECT_EQ(q.series.coeff(0), rquant::permutation_P(2));
    EXPECT_TRUE(q.series.coeff(1).is_zero());
    // side conditions may appear at h^4; every one of them holds at the
    // all-zero point, where the family is P itself
    const HSeries at_zero = rquant::substitute_params(q.series, all_zero(q));
    EXPECT_TRUE(rquant::braid_residual(at_zero).is_zero);
    for (const auto& rec : q.per_order)
      for (const auto& o : rec.obstructions) EXPECT_TRUE(rquant::substitute(o, all_zero(q)).is_zero());
  }
}

TEST(Quantize, ExampleOneBraidOnly) {
  const auto q = rquant::quantize(example1_limit(), 2, {});
  EXPECT_TRUE(q.obstruction_free());
  ASSERT_EQ(q.per_order.size(), 1u);
  EXPECT_EQ(q.per_order[0].kernel_dim, 16u);
  // the free (1,1)->(0,0) direction at h^2
  EXPECT_EQ(q.series.coeff(2).at(1, 1, 0, 0).str(), "p2_12");

  const auto m = rquant::membership_check(q, rquant::example1(2));
  ASSERT_TRUE(m.member) << m.reason;
  EXPECT_EQ(m.bindings.at("p2_12").str(), "theta");
  for (const auto& [name, value] : m.bindings) {
    if (name != "p2_12") {
      EXPECT_TRUE(value.is_zero()) << name;
    }
  }
  EXPECT_EQ(m.free_directions, 1u);
  expect_constraints_hold(q);
}

TEST(Quantize, InvolutionForcesThetaToZero) {
  const auto q = rquant::quantize(example1_limit(), 2, {true, false, false});
  EXPECT_TRUE(q.obstruction_free());
  EXPECT_TRUE(q.series.coeff(2).at(1, 1, 0, 0).is_zero());

  const auto symbolic = rquant::membership_check(q, rquant::example1(2));
  EXPECT_FALSE(symbolic.member);
  EXPECT_EQ(symbolic.witness_index, (std::vector<std::size_t>{2, 1, 1, 0, 0}));
  EXPECT_EQ(symbolic.witness_value.str(), "theta");

  EXPECT_TRUE(rquant::membership_check(q, theta_zero(rquant::example1(2))).member);
  expect_constraints_hold(q);
}

TEST(Quantize, ExampleTwoFamilyHasOneLambdaDirection) {
  const auto q = rquant::quantize(example2_limit(), 3, {true, true, false});
  EXPECT_TRUE(q.obstruction_free());
  const auto m = rquant::membership_check(q, rquant::example2(3));
  ASSERT_TRUE(m.member) << m.reason;
  EXPECT_EQ(m.free_directions, 1u);
  bool mentions_lambda = false;
  for (const auto& [name, value] : m.bindings) {
    const auto used = value.used_params();
    if (!used.empty()) {
      EXPECT_EQ(used, std::vector<std::string>{"lambda"});
      mentions_lambda = true;
    }
  }
  EXPECT_TRUE(mentions_lambda);
  expect_constraints_hold(q);
}

TEST(Quantize, LookaheadRunsSatisfyEveryConstraint) {
  expect_constraints_hold(rquant::quantize(example1_limit(), 4, {true, true, true}));
  expect_constraints_hold(rquant::quantize(example1_limit(), 3, {false, false, true}));
  expect_constraints_hold(rquant::quantize(example2_limit(), 4, {true, true, true}));
}

TEST(Quantize, ClassicalLimitIsTheInput) {
  for (const auto& r : {example1_limit(), example2_limit()}) {
    const auto q = rquant::quantize(r, 3, {true, true, false});
    const auto lim = rquant::classical_limit(q.series);
    EXPECT_TRUE(lim.leading_is_permutation);
    EXPECT_EQ(lim.r, r);
  }
}

TEST(Quantize, ExtendingTheOrderKeepsLowerCoefficients) {
  for (const ConstraintSet cs : {ConstraintSet{true, true, false}, ConstraintSet{true, true, true}}) {
    const auto a = rquant::quantize(example2_limit(), 3, cs);
    const auto b = rquant::quantize(example2_limit(), 4, cs);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(a.series.coeff(n), b.series.coeff(n)) << n;
  }
}

TEST(Quantize, MembershipOfOwnSpecialization) {
  const auto q = rquant::quantize(example1_limit(), 3, {true, false, false});
  const auto m = rquant::membership_check(q, rquant::substitute_params(q.series, all_zero(q)));
  ASSERT_TRUE(m.member);
  for (const auto& [name, value] : m.bindings) EXPECT_TRUE(value.is_zero()) << name;
  EXPECT_EQ(m.free_directions, 0u);
}

TEST(Quantize, MembershipShapeMismatchThrows) {
  const auto q = rquant::quantize(example1_limit(), 2, {});
  EXPECT_THROW((void)rquant::membership_check(q, rquant::example1(3)), std::invalid_argument);
  EXPECT_THROW((void)rquant::membership_check(q, rquant::example2(3).truncated(2)), std::invalid_argument);
}

TEST(Quantize, NonCybInputIsObstructedAtOrderTwo) {
  rquant::testing::Gen gen(53);
  ClassicalR r{rquant::testing::skew_part(gen.rational_op(2, 0.5))};
  while (rquant::cyb_residual(r).is_zero) r = ClassicalR{rquant::testing::skew_part(gen.rational_op(2, 0.5))};
  const auto q = rquant::quantize(r, 4, {});
  EXPECT_FALSE(q.obstruction_free());
  ASSERT_FALSE(q.per_order.empty());
  EXPECT_EQ(q.per_order.back().order, 2u);
  EXPECT_FALSE(q.per_order.back().obstructions.empty());
  EXPECT_TRUE(q.stopped_early);
  EXPECT_EQ(q.series.order(), 1u);
}

TEST(Quantize, NonSkewInputFailsInvolutionAtOrderOne) {
  const auto q = rquant::quantize(ClassicalR{Op2::identity(2)}, 3, {true, false, false});
  EXPECT_TRUE(q.stopped_early);
  ASSERT_EQ(q.per_order.size(), 1u);
  EXPECT_EQ(q.per_order[0].order, 1u);
  EXPECT_FALSE(q.per_order[0].obstructions.empty());
}

TEST(Quantize, Validation) {
  EXPECT_THROW((void)rquant::quantize(example1_limit(), 1, {}), std::invalid_argument);
  EXPECT_THROW((void)rquant::quantize(rquant::flag_r(2, Poly::variable("c")), 2, {}), std::invalid_argument);
}

TEST(Quantize, ParameterNamesAreDeterministic) {
  const auto a = rquant::quantize(example1_limit(), 3, {true, false, false});
  const auto b = rquant::quantize(example1_limit(), 3, {true, false, false});
  EXPECT_EQ(a.parameters(), b.parameters());
  EXPECT_EQ(a.series, b.series);
  ASSERT_FALSE(a.parameters().empty());
  EXPECT_EQ(a.parameters().front(), "p2_0");
}

// The braid block for R_n, built from the constraint expansion, against the
// operator written out by hand. Both vanish identically.
TEST(ConstraintBlock, BraidLeadingOperatorIsZero) {
  for (std::size_t d = 2; d <= 3; ++d) {
    const ClassicalR r = d == 2 ? example1_limit() : example2_limit();
    for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(rquant::constraint_block(Constraint::kBraid, r, n, n).is_zero());

    const Op2 p = rquant::permutation_P(d);
    const Op3 p12 = rquant::lift12(p), p23 = rquant::lift23(p);
    rquant::testing::Gen gen(59);
    for (int trial = 0; trial < 3; ++trial) {
      const Op2 x = gen.rational_op(d, 0.5);
      const Op3 x12 = rquant::lift12(x), x23 = rquant::lift23(x);
      using rquant::compose;
      const Op3 l = compose(compose(x12, p23), p12) + compose(compose(p12, x23), p12) + compose(compose(p12, p23), x12) -
                    compose(compose(x23, p12), p23) - compose(compose(p23, x12), p23) - compose(compose(p23, p12), x23);
      EXPECT_TRUE(l.is_zero());
    }
  }
}

TEST(ConstraintBlock, InvolutionIsPXPlusXP) {
  const ClassicalR r = example1_limit();
  const Op2 p = rquant::permutation_P(2);
  const auto block = rquant::constraint_block(Constraint::kInvolution, r, 3, 3);
  for (std::size_t c = 0; c < 16; ++c) {
    const Op2 x = rquant::unit_op(2, c / 8, (c / 4) % 2, (c / 2) % 2, c % 2);
    const Op2 expected = rquant::testing::index_sum_compose(p, x) + rquant::testing::index_sum_compose(x, p);
    EXPECT_EQ(column(block, c), flatten(expected)) << c;
  }
}

TEST(ConstraintBlock, MirrorIsTwoPXAtEvenOrderAndZeroAtOdd) {
  const ClassicalR r = example2_limit();
  const Op2 p = rquant::permutation_P(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto block = rquant::constraint_block(Constraint::kMirror, r, n, n);
    if (n % 2 == 1) {
      EXPECT_TRUE(block.is_zero()) << n;
      continue;
    }
    for (std::size_t c = 0; c < 81; c += 7) {
      const Op2 x = rquant::unit_op(3, c / 27, (c / 9) % 3, (c / 3) % 3, c % 3);
      EXPECT_EQ(column(block, c), flatten(rquant::testing::index_sum_compose(p, x) * Rational(2))) << n << ' ' << c;
    }
  }
}

TEST(ConstraintBlock, Validation) {
  EXPECT_THROW((void)rquant::constraint_block(Constraint::kBraid, example1_limit(), 1, 1), std::invalid_argument);
  EXPECT_THROW((void)rquant::constraint_block(Constraint::kBraid, example1_limit(), 2, 4), std::invalid_argument);
}

TEST(ParameterReport, ConjecturedValues) {
  const auto mirror = rquant::parameter_report(rquant::quantize(example1_limit(), 2, {true, true, false}), 2);
  ASSERT_TRUE(mirror.conjectured.has_value());
  EXPECT_EQ(*mirror.conjectured, 0);
  const auto skew = rquant::parameter_report(rquant::quantize(example2_limit(), 2, {true, false, false}), 3);
  EXPECT_EQ(*skew.conjectured, 2);
  const auto braid = rquant::parameter_report(rquant::quantize(example1_limit(), 2, {}), 2);
  EXPECT_FALSE(braid.conjectured.has_value());
  EXPECT_FALSE(braid.agrees);
  EXPECT_EQ(braid.per_order_counts, std::vector<std::size_t>{16});
  EXPECT_EQ(braid.constraint_label, "braid");
}
