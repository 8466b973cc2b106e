#include "ptri/prob_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace ptri {

namespace {

struct Point {
  double u;
  double v;
};

// Signed distance-like value; the kept side is s <= 0 (u <= v).
double side(const Point& p) { return p.u - p.v; }

// Clips a convex polygon to the half plane u <= v.
std::vector<Point> clip_below_diagonal(const std::vector<Point>& poly) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double sa = side(a);
    const double sb = side(b);
    if (sa <= 0) out.push_back(a);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      const double t = sa / (sa - sb);
      out.push_back({a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)});
    }
  }
  return out;
}

double shoelace_area(const std::vector<Point>& poly) {
  double twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    twice += a.u * b.v - b.u * a.v;
  }
  return std::fabs(twice) / 2.0;
}

}  // namespace

double prob_leq(const Interval& x, const Interval& y) {
  const double wx = x.width();
  const double wy = y.width();
  if (wx == 0 && wy == 0) return x.lo() <= y.lo() ? 1.0 : 0.0;
  if (wx == 0) {
    // P(a <= Y)
    return std::clamp((y.hi() - std::max(x.lo(), y.lo())) / wy, 0.0, 1.0);
  }
  if (wy == 0) {
    // P(X <= b)
    return std::clamp((std::min(y.lo(), x.hi()) - x.lo()) / wx, 0.0, 1.0);
  }
  if (x.hi() <= y.lo()) return 1.0;
  if (y.hi() <= x.lo()) return 0.0;
  const std::vector<Point> rect = {
      {x.lo(), y.lo()}, {x.hi(), y.lo()}, {x.hi(), y.hi()}, {x.lo(), y.hi()}};
  const auto kept = clip_below_diagonal(rect);
  if (kept.size() < 3) return 0.0;
  return std::clamp(shoelace_area(kept) / (wx * wy), 0.0, 1.0);
}

double prob_leq_mc(const Interval& x, const Interval& y, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("prob_leq_mc: sample count must be positive");
  std::mt19937_64 gen(seed);
  constexpr double kScale = 0x1.0p-53;
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * kScale; };

  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = x.lo() + x.width() * unit();
    const double v = y.lo() + y.width() * unit();
    if (u <= v) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

const char* to_string(StochasticVerdict::Order o) noexcept {
  switch (o) {
    case StochasticVerdict::Order::Less: return "LESS";
    case StochasticVerdict::Order::Greater: return "GREATER";
    case StochasticVerdict::Order::Tie: return "TIE";
  }
  return "?";
}

StochasticVerdict stochastic_compare(const Interval& x, const Interval& y, double eps) {
  StochasticVerdict r;
  r.p_leq = prob_leq(x, y);
  r.p_geq = prob_leq(y, x);
  if (r.p_geq < r.p_leq - eps) {
    r.order = StochasticVerdict::Order::Less;
  } else if (r.p_leq < r.p_geq - eps) {
    r.order = StochasticVerdict::Order::Greater;
  } else {
    r.order = StochasticVerdict::Order::Tie;
  }
  return r;
}

bool verify_theorem1(const Interval& x, const Interval& y, double eps) {
  const auto order = stochastic_compare(x, y, eps).order;
  switch (cmp_tp(x, y, eps)) {
    case Verdict::StrictlyLess: return order == StochasticVerdict::Order::Less;
    case Verdict::StrictlyGreater: return order == StochasticVerdict::Order::Greater;
    case Verdict::Equal:
    case Verdict::Equivalent: return order == StochasticVerdict::Order::Tie;
    case Verdict::Incomparable: return false;
  }
  return false;
}

}  // namespace ptri
