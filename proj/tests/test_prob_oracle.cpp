#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ptri/prob_oracle.hpp"
#include "support.hpp"

namespace ptri {
namespace {

using test::iv;
using test::pt;

// P(X <= Y) = E[F_X(Y)], integrated with the composite midpoint rule.
double quadrature_leq(const Interval& x, const Interval& y, int n = 200000) {
  auto cdf = [&](double v) {
    if (x.degenerate()) return v >= x.lo() ? 1.0 : 0.0;
    return std::clamp((v - x.lo()) / x.width(), 0.0, 1.0);
  };
  if (y.degenerate()) return cdf(y.lo());
  const double h = y.width() / n;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += cdf(y.lo() + (i + 0.5) * h);
  return sum / n;
}

TEST(ProbLeq, Examples) {
  EXPECT_NEAR(prob_leq(iv(0.4, 0.8), iv(0.6, 0.7)), 0.625, 1e-12);
  EXPECT_NEAR(prob_leq(iv(0.4, 0.8), iv(0.6, 0.9)), 5.0 / 6.0, 1e-12);
  EXPECT_EQ(prob_leq(iv(0, 0.3), iv(0.7, 1)), 1.0);
  EXPECT_EQ(prob_leq(iv(0.7, 1), iv(0, 0.3)), 0.0);
  EXPECT_NEAR(prob_leq(iv(0, 1), iv(0, 1)), 0.5, 1e-12);
}

TEST(ProbLeq, DegenerateIntervalsArePointMasses) {
  EXPECT_EQ(prob_leq(pt(0.2), pt(0.5)), 1.0);
  EXPECT_EQ(prob_leq(pt(0.5), pt(0.2)), 0.0);
  EXPECT_EQ(prob_leq(pt(0.5), pt(0.5)), 1.0);
  EXPECT_NEAR(prob_leq(pt(0.5), iv(0, 1)), 0.5, 1e-12);
  EXPECT_NEAR(prob_leq(iv(0, 1), pt(0.25)), 0.25, 1e-12);
  const auto v = stochastic_compare(pt(0.5), pt(0.5));
  EXPECT_EQ(v.p_leq, 1.0);
  EXPECT_EQ(v.p_geq, 1.0);
  EXPECT_EQ(v.order, StochasticVerdict::Order::Tie);
}

TEST(ProbLeq, MatchesQuadrature) {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 200; ++i) {
    const Interval x = test::random_interval(gen);
    const Interval y = test::random_interval(gen);
    // A point-mass x makes the integrand a step, which the midpoint rule
    // resolves only to one cell.
    const double tol = x.degenerate() ? 1.0 / 200000 : 1e-6;
    EXPECT_NEAR(prob_leq(x, y), quadrature_leq(x, y), tol) << to_string(x) << " " << to_string(y);
  }
}

TEST(ProbLeqMc, ConvergesAndIsDeterministic) {
  const double a = prob_leq_mc(iv(0.4, 0.8), iv(0.6, 0.7), 1000000, 42);
  EXPECT_NEAR(a, 0.625, 0.005);
  EXPECT_EQ(a, prob_leq_mc(iv(0.4, 0.8), iv(0.6, 0.7), 1000000, 42));
  EXPECT_NEAR(prob_leq_mc(iv(0, 1), iv(0, 1), 1000000, 3), 0.5, 0.005);
  EXPECT_EQ(prob_leq_mc(pt(0.2), pt(0.5), 10, 1), 1.0);
  EXPECT_THROW(prob_leq_mc(iv(0, 1), iv(0, 1), 0, 1), std::invalid_argument);
  EXPECT_STREQ(kMonteCarloGenerator, "mt19937_64");
}

TEST(StochasticCompare, OrderFollowsProbabilities) {
  EXPECT_EQ(stochastic_compare(iv(0.4, 0.8), iv(0.6, 0.7)).order, StochasticVerdict::Order::Less);
  EXPECT_EQ(stochastic_compare(iv(0.4, 0.9), iv(0.5, 0.6)).order, StochasticVerdict::Order::Greater);
  EXPECT_EQ(stochastic_compare(pt(0.5), iv(0, 1)).order, StochasticVerdict::Order::Tie);
  EXPECT_STREQ(to_string(StochasticVerdict::Order::Less), "LESS");
}

TEST(TpMatchesStochasticOrder, Examples) {
  EXPECT_TRUE(verify_theorem1(iv(0.4, 0.8), iv(0.6, 0.7)));
  EXPECT_TRUE(verify_theorem1(pt(0.5), iv(0, 1)));
  EXPECT_TRUE(verify_theorem1(iv(0.4, 0.9), iv(0.5, 0.6)));
}

TEST(ProbLeq, ComplementaryForContinuousPairs) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 1000; ++i) {
    const Interval x = test::random_interval(gen);
    const Interval y = test::random_interval(gen);
    if (x.degenerate() && y.degenerate() && x == y) continue;
    EXPECT_NEAR(prob_leq(x, y) + prob_leq(y, x), 1.0, 1e-9);
  }
}

TEST(ProbLeq, CertainExactlyWhenSeparated) {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 1000; ++i) {
    const Interval x = test::random_interval(gen);
    const Interval y = test::random_interval(gen);
    const bool separated = x.hi() <= y.lo();
    EXPECT_EQ(std::abs(prob_leq(x, y) - 1.0) < 1e-12, separated) << to_string(x) << " " << to_string(y);
  }
}

}  // namespace
}  // namespace ptri
