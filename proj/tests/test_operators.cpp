#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ptri/error.hpp"
#include "ptri/operators.hpp"
#include "support.hpp"

namespace ptri {
namespace {

using test::iv;
using test::near_interval;
using test::pt;

TEST(NegateStandard, Examples) {
  EXPECT_EQ(negate_standard(iv(0, 1)), iv(0, 1));
  EXPECT_TRUE(near_interval(negate_standard(iv(0.9, 1)), iv(0, 0.1)));
  EXPECT_TRUE(near_interval(negate_standard(iv(0.3, 0.5)), iv(0.5, 0.7)));
}

TEST(NegateLifted, Examples) {
  const UnitNegator one_minus = [](double a) { return 1 - a; };
  const UnitNegator one_minus_sq = [](double a) { return 1 - a * a; };
  EXPECT_TRUE(near_interval(negate_lifted(one_minus, iv(0.4, 0.8)), iv(0.2, 0.6)));
  EXPECT_EQ(negate_lifted(one_minus_sq, iv(0, 1)), iv(0, 1));
  EXPECT_EQ(negate_lifted(one_minus, pt(0.5)), pt(0.5));
}

TEST(NegateLifted, NonLinearNegatorIsNotTpDecreasing) {
  // Equal midpoints going in, different midpoints coming out.
  const UnitNegator sugeno = [](double a) { return (1 - a) / (1 + a); };
  const Interval x = pt(0.05);
  const Interval y = iv(0, 0.1);
  ASSERT_EQ(cmp_tp(x, y), Verdict::Equivalent);
  EXPECT_EQ(cmp_tp(negate_lifted(sugeno, y), negate_lifted(sugeno, x)), Verdict::StrictlyGreater);
}

TEST(NegatorN1, Examples) {
  const double third = 1.0 / 3.0;
  EXPECT_EQ(negator_n1(iv(0, 1)), iv(third, 2 * third));
  EXPECT_EQ(negator_n1(iv(third, 2 * third)), iv(0, 1));
  EXPECT_EQ(negator_n1(iv(0, third)), iv(2 * third, 1));
  EXPECT_EQ(negator_n1(pt(0)), pt(1));
  EXPECT_THROW(negator_n1(iv(0.2, 0.5)), DomainError);
}

TEST(TMinP, Examples) {
  EXPECT_EQ(t_min_p(iv(0.1, 0.5), iv(0.2, 0.3)), iv(0.2, 0.3));
  EXPECT_EQ(t_min_p(pt(0.3), pt(0.6)), pt(0.3));
  EXPECT_EQ(s_min_p(pt(0.5), iv(0, 1)), pt(0.5));
  EXPECT_EQ(s_min_p(iv(0, 1), pt(0.5)), pt(0.5));
  EXPECT_EQ(t_min_p(iv(0, 1), pt(0.5)), pt(0.5));
  EXPECT_EQ(s_min_p(pt(0.3), pt(0.6)), pt(0.6));
}

TEST(Bilattice, PointwiseMinMax) {
  EXPECT_EQ(t_min_bilattice(pt(0.8), iv(0.5, 1)), iv(0.5, 0.8));
  EXPECT_EQ(t_min_bilattice(pt(1), iv(0.9, 1)), iv(0.9, 1));
  EXPECT_EQ(s_max_bilattice(iv(0.2, 0.4), pt(0.3)), iv(0.3, 0.4));
}

TEST(Product, Examples) {
  EXPECT_TRUE(near_interval(t_pr(pt(0.6), iv(0.3, 0.7)), iv(0.18, 0.42)));
  EXPECT_TRUE(near_interval(t_pr(pt(0.4), iv(0.8, 1)), iv(0.32, 0.4)));
  EXPECT_TRUE(near_interval(t_ppr(iv(0.4, 0.8), iv(0.5, 0.6)), iv(0.2, 0.4)));
  EXPECT_TRUE(near_interval(s_pr(pt(0.4), iv(0.8, 1)), iv(0.88, 1)));
}

TEST(Product, NotIncreasingUnderTp) {
  // x <=tp x2 but t_pr(x, y) >tp t_pr(x2, y): the upper endpoint of y
  // scales only x's upper endpoint.
  const Interval x = iv(0, 1);
  const Interval x2 = iv(0.5, 0.6);
  const Interval y = iv(0, 1);
  ASSERT_EQ(cmp_tp(x, x2), Verdict::StrictlyLess);
  EXPECT_EQ(cmp_tp(t_pr(x, y), t_pr(x2, y)), Verdict::StrictlyGreater);
}

TEST(Bilattice, TMinIsNotIncreasingUnderTp) {
  const Interval x = iv(0.1, 0.9);  // midpoint 0.5
  const Interval x2 = pt(0.55);
  const Interval y = iv(0, 1);
  ASSERT_EQ(cmp_tp(x, x2), Verdict::StrictlyLess);
  EXPECT_EQ(cmp_tp(t_min_bilattice(x, y), t_min_bilattice(x2, y)), Verdict::StrictlyGreater);
}

TEST(SImplicator, Examples) {
  EXPECT_EQ(s_implicator(s_pr, negate_standard, pt(1), pt(0)), pt(0));
  EXPECT_TRUE(near_interval(s_implicator(s_pr, negate_standard, pt(0.5), pt(0.5)), pt(0.75)));
  EXPECT_TRUE(near_interval(s_implicator(s_max_bilattice, negate_standard, iv(0.2, 0.4), iv(0.1, 0.3)),
                            iv(0.6, 0.8)));
  EXPECT_EQ(s_implicator(s_pr, negate_standard, pt(0), iv(0.2, 0.7)), pt(1));
}

TEST(RImplicatorMin, Cases) {
  EXPECT_EQ(r_implicator_min(iv(0.3, 0.5), iv(0.6, 0.8)), ImplicationResult(pt(1)));
  EXPECT_EQ(r_implicator_min(iv(0.4, 0.6), iv(0.2, 0.8)), ImplicationResult(pt(1)));
  const auto r = r_implicator_min(iv(0.6, 0.8), iv(0.3, 0.5));
  ASSERT_TRUE(r.is_mset());
  EXPECT_NEAR(r.mset().center(), 0.4, 1e-12);
  EXPECT_TRUE(near_interval(r.representative(), pt(0.4)));
  EXPECT_EQ(to_string(r), "m-set(0.4)");
}

TEST(RImplicatorMin, ResiduationByBruteForce) {
  // Sup over a fine grid of the gammas satisfying t_min_p(x, g) <=tp y.
  const Interval x = iv(0.6, 0.8);
  const Interval y = iv(0.3, 0.5);
  double best = -1;
  for (int j = 0; j <= 100; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Interval g = iv(i / 100.0, j / 100.0);
      if (holds_leq(cmp_tp(t_min_p(x, g), y))) best = std::max(best, g.midpoint());
    }
  }
  EXPECT_NEAR(best, 0.4, 1e-12);
}

TEST(RImplicatorPr, Examples) {
  EXPECT_EQ(r_implicator_pr(iv(0.3, 0.4), iv(0.5, 0.9)), ImplicationResult(pt(1)));
  EXPECT_TRUE(near_interval(r_implicator_pr(iv(0.2, 0.8), iv(0.3, 0.4)).representative(), pt(0.7), 1e-3));
  EXPECT_TRUE(near_interval(r_implicator_pr(iv(0.4, 0.8), iv(0.2, 0.4)).representative(), pt(0.5), 1e-3));
}

TEST(RImplicatorPr, DegenerateAntecedentGivesMSet) {
  // Every gamma of midpoint 0.5 meets the bound with equality.
  const auto r = r_implicator_pr(pt(0.6), pt(0.3), 100);
  ASSERT_TRUE(r.is_mset());
  EXPECT_NEAR(r.mset().center(), 0.5, 1e-9);
}

TEST(RImplicatorPr, ClosedForm) {
  EXPECT_EQ(r_implicator_pr_closed_form(iv(0.3, 0.4), iv(0.5, 0.9)), pt(1));
  EXPECT_TRUE(near_interval(*r_implicator_pr_closed_form(iv(0.2, 0.8), iv(0.3, 0.4)), pt(0.7)));
  EXPECT_TRUE(near_interval(*r_implicator_pr_closed_form(iv(0.4, 0.8), iv(0.2, 0.4)), pt(0.5)));
}

TEST(RImplicatorPr, RatioBranchYieldsInvertedCandidate) {
  // y1/y2 > x1/x2 forces y1/x1 > y2/x2, so [y1/x1, y2/x2] is never an
  // interval; the grid search still finds the degenerate optimum.
  const Interval x = iv(0.4, 0.8);
  const Interval y = iv(0.35, 0.4);
  EXPECT_FALSE(r_implicator_pr_closed_form(x, y).has_value());
  EXPECT_TRUE(near_interval(r_implicator_pr(x, y).representative(), pt(0.75 / 1.2), 1e-3));
}

TEST(RImplicatorPr, GridAgreesWithLinearProgramOptimum) {
  // Maximising g1+g2 under x1*g1 + x2*g2 <= y1+y2, g1 <= g2 <= 1 puts all
  // the weight on g1 = g2, so the optimum is min(1, (y1+y2)/(x1+x2)).
  std::mt19937_64 gen(20240611);
  int checked = 0;
  while (checked < 25) {
    const Interval x = test::random_interval(gen);
    const Interval y = test::random_interval(gen);
    if (x.lo() + x.hi() <= y.lo() + y.hi() || x.degenerate()) continue;
    const double g = (y.lo() + y.hi()) / (x.lo() + x.hi());
    const auto r = r_implicator_pr(x, y, 500);
    EXPECT_NEAR(r.representative().midpoint(), g, 2e-3) << to_string(x) << " " << to_string(y);
    EXPECT_LE(r.representative().width(), 2.5e-3);
    ++checked;
  }
}

TEST(OperatorId, RoundTrip) {
  for (const char* name : {"neg", "tmin", "tminp", "tpr", "tppr", "spr", "smax", "sminp", "imin", "ipr", "simp"}) {
    const auto id = parse_operator_id(name);
    ASSERT_TRUE(id.has_value()) << name;
    EXPECT_EQ(to_string(*id), name);
  }
  EXPECT_FALSE(parse_operator_id("max").has_value());
  EXPECT_FALSE(is_binary(OperatorId::Neg));
  EXPECT_THROW(binary_operator(OperatorId::Neg), std::invalid_argument);
  EXPECT_TRUE(near_interval(binary_operator(OperatorId::SImp)(pt(0.5), pt(0.5)), pt(0.75)));
  EXPECT_TRUE(near_interval(binary_operator(OperatorId::IMin)(iv(0.6, 0.8), iv(0.3, 0.5)), pt(0.4)));
}

}  // namespace
}  // namespace ptri
