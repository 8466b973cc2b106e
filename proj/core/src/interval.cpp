#include "ptri/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptri/error.hpp"
#include "ptri/format.hpp"

namespace ptri {

namespace {

bool near(double a, double b, double eps) noexcept { return std::fabs(a - b) <= eps; }

Verdict verdict_from(bool leq, bool geq, bool same) noexcept {
  if (same) return Verdict::Equal;
  if (leq && geq) return Verdict::Equivalent;
  if (leq) return Verdict::StrictlyLess;
  if (geq) return Verdict::StrictlyGreater;
  return Verdict::Incomparable;
}

}  // namespace

Interval Interval::make(double lo, double hi) {
  // NaN fails both range tests.
  if (!(lo >= 0.0 && lo <= 1.0) || !(hi >= 0.0 && hi <= 1.0)) {
    throw OutOfRangeError("interval endpoint outside [0,1]: lo=" + format_number(lo) +
                          " hi=" + format_number(hi));
  }
  if (lo > hi) {
    throw InvertedError("interval lower endpoint exceeds upper: lo=" + format_number(lo) +
                        " hi=" + format_number(hi));
  }
  return Interval(lo, hi);
}

bool approx_equal(const Interval& x, const Interval& y, double eps) noexcept {
  return near(x.lo(), y.lo(), eps) && near(x.hi(), y.hi(), eps);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::StrictlyLess: return "LESS";
    case Verdict::StrictlyGreater: return "GREATER";
    case Verdict::Equivalent: return "EQUIVALENT";
    case Verdict::Equal: return "EQUAL";
    case Verdict::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

bool holds_leq(Verdict v) noexcept {
  return v == Verdict::StrictlyLess || v == Verdict::Equivalent || v == Verdict::Equal;
}

const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Truth: return "t";
    case Ordering::Knowledge: return "k";
    case Ordering::TruthPreorder: return "tp";
    case Ordering::KnowledgePreorder: return "kp";
  }
  return "?";
}

Verdict cmp_t_bilattice(const Interval& x, const Interval& y, double eps) noexcept {
  const bool leq = x.lo() <= y.lo() + eps && x.hi() <= y.hi() + eps;
  const bool geq = y.lo() <= x.lo() + eps && y.hi() <= x.hi() + eps;
  // For a partial order mutual <= already means equality.
  return verdict_from(leq, geq, leq && geq);
}

Verdict cmp_k_bilattice(const Interval& x, const Interval& y, double eps) noexcept {
  const bool leq = x.lo() <= y.lo() + eps && y.hi() <= x.hi() + eps;
  const bool geq = y.lo() <= x.lo() + eps && x.hi() <= y.hi() + eps;
  return verdict_from(leq, geq, leq && geq);
}

Verdict cmp_tp(const Interval& x, const Interval& y, double eps) noexcept {
  const double d = x.midpoint() - y.midpoint();
  if (std::fabs(d) <= eps) {
    return approx_equal(x, y, eps) ? Verdict::Equal : Verdict::Equivalent;
  }
  return d < 0 ? Verdict::StrictlyLess : Verdict::StrictlyGreater;
}

Verdict cmp_kp(const Interval& x, const Interval& y, double eps) noexcept {
  const double d = x.width() - y.width();
  if (std::fabs(d) <= eps) {
    return approx_equal(x, y, eps) ? Verdict::Equal : Verdict::Equivalent;
  }
  // Wider carries less knowledge.
  return d > 0 ? Verdict::StrictlyLess : Verdict::StrictlyGreater;
}

Verdict compare(Ordering o, const Interval& x, const Interval& y, double eps) noexcept {
  switch (o) {
    case Ordering::Truth: return cmp_t_bilattice(x, y, eps);
    case Ordering::Knowledge: return cmp_k_bilattice(x, y, eps);
    case Ordering::TruthPreorder: return cmp_tp(x, y, eps);
    case Ordering::KnowledgePreorder: return cmp_kp(x, y, eps);
  }
  return Verdict::Incomparable;
}

Interval lub_tp(std::span<const Interval> xs, double eps) {
  if (xs.empty()) throw std::invalid_argument("lub_tp of an empty set");

  double top = xs.front().midpoint();
  for (const auto& x : xs) top = std::max(top, x.midpoint());

  const Interval* best = nullptr;
  for (const auto& x : xs) {
    if (x.midpoint() < top - eps) continue;
    if (best == nullptr || x.width() < best->width() - eps) {
      best = &x;
    } else if (near(x.width(), best->width(), eps) && !approx_equal(x, *best, eps)) {
      throw IndecisionError("lub_tp: " + to_string(x) + " and " + to_string(*best) +
                                " tie on midpoint and width",
                            {*best, x});
    }
  }
  return *best;
}

Interval lub_kp(std::span<const Interval> xs, double eps) {
  if (xs.empty()) throw std::invalid_argument("lub_kp of an empty set");

  double narrowest = xs.front().width();
  for (const auto& x : xs) narrowest = std::min(narrowest, x.width());

  const Interval* best = nullptr;
  for (const auto& x : xs) {
    if (x.width() > narrowest + eps) continue;
    if (best == nullptr) {
      best = &x;
    } else if (!approx_equal(x, *best, eps)) {
      throw IndecisionError("lub_kp: " + to_string(*best) + " and " + to_string(x) +
                                " carry the same amount of information",
                            {*best, x});
    }
  }
  return *best;
}

Interval k_join_bilattice(const Interval& x, const Interval& y) {
  const double lo = std::max(x.lo(), y.lo());
  const double hi = std::min(x.hi(), y.hi());
  if (lo > hi) {
    throw InconsistentError("knowledge join of disjoint intervals " + to_string(x) + " and " +
                            to_string(y));
  }
  return Interval::make(lo, hi);
}

MSet MSet::of(double center) {
  if (!(center >= 0.0 && center <= 1.0)) {
    throw OutOfRangeError("m-set center outside [0,1]: " + format_number(center));
  }
  return MSet(center);
}

bool MSet::contains(const Interval& x, double eps) const noexcept {
  return near(x.midpoint(), center_, eps);
}

Interval MSet::canonical() const noexcept { return Interval::make(center_, center_); }

Interval MSet::widest() const noexcept {
  return Interval::make(std::max(0.0, 2.0 * center_ - 1.0), std::min(1.0, 2.0 * center_));
}

std::vector<Interval> intervals_over(std::span<const double> points) {
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Interval> out;
  out.reserve(sorted.size() * (sorted.size() + 1) / 2);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i; j < sorted.size(); ++j) {
      out.push_back(Interval::make(sorted[i], sorted[j]));
    }
  }
  return out;
}

namespace {

// Shared body of the two bound searches; `sign` = +1 looks upward.
std::vector<Interval> extremal_strict_bounds(std::span<const Interval> universe,
                                             std::span<const Interval> of, double eps,
                                             int sign) {
  const Verdict wanted = sign > 0 ? Verdict::StrictlyGreater : Verdict::StrictlyLess;
  std::vector<Interval> bounds;
  for (const auto& u : universe) {
    const bool bounds_all = std::all_of(of.begin(), of.end(), [&](const Interval& a) {
      return cmp_tp(u, a, eps) == wanted;
    });
    if (bounds_all) bounds.push_back(u);
  }
  if (bounds.empty()) return bounds;

  double extreme = bounds.front().midpoint();
  for (const auto& b : bounds) {
    extreme = sign > 0 ? std::min(extreme, b.midpoint()) : std::max(extreme, b.midpoint());
  }
  std::erase_if(bounds, [&](const Interval& b) { return !near(b.midpoint(), extreme, eps); });
  return bounds;
}

}  // namespace

std::vector<Interval> minimal_strict_upper_bounds_tp(std::span<const Interval> universe,
                                                     std::span<const Interval> of, double eps) {
  return extremal_strict_bounds(universe, of, eps, +1);
}

std::vector<Interval> maximal_strict_lower_bounds_tp(std::span<const Interval> universe,
                                                     std::span<const Interval> of, double eps) {
  return extremal_strict_bounds(universe, of, eps, -1);
}

}  // namespace ptri
