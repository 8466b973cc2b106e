#pragma once

#include <cstdint>

#include "ptri/interval.hpp"

namespace ptri {

/// Stochastic reading of truth ordering: each interval is the support of a
/// uniform distribution over the unknown true degree. Degenerate intervals
/// are point masses.

/// P(X <= Y) for independent X ~ U(x), Y ~ U(y). Exact (area of the half
/// plane u <= v clipped to the rectangle x * y). Two equal points give 1.
double prob_leq(const Interval& x, const Interval& y);

/// Identifier of the generator behind prob_leq_mc.
inline constexpr const char* kMonteCarloGenerator = "mt19937_64";

/// Monte Carlo estimate of prob_leq from n sample pairs. The sequence is a
/// function of (seed, n) only: uniforms are built from the top 53 bits of
/// each mt19937_64 output, so results do not depend on the standard library.
double prob_leq_mc(const Interval& x, const Interval& y, std::uint64_t n, std::uint64_t seed);

struct StochasticVerdict {
  enum class Order { Less, Greater, Tie };

  double p_leq = 0;
  double p_geq = 0;
  Order order = Order::Tie;
};

const char* to_string(StochasticVerdict::Order o) noexcept;

/// p_leq, p_geq = P(X >= Y), and which of the two dominates (beyond eps).
StochasticVerdict stochastic_compare(const Interval& x, const Interval& y, double eps = kEpsilon);

/// True iff the stochastic order agrees with cmp_tp: Less with
/// StrictlyLess, Greater with StrictlyGreater, Tie with Equal/Equivalent.
bool verify_theorem1(const Interval& x, const Interval& y, double eps = kEpsilon);

}  // namespace ptri
