#pragma once

#include <span>
#include <string>
#include <vector>

namespace ptri {

/// Tolerance used by every ordering comparison in the library.
inline constexpr double kEpsilon = 1e-9;

/// A closed sub-interval [lo, hi] of [0,1]; the epistemic state of a
/// proposition. Instances are always valid: construction goes through
/// make(), which rejects out-of-range or inverted endpoints.
class Interval {
 public:
  /// Throws OutOfRangeError or InvertedError. Nothing is clamped.
  static Interval make(double lo, double hi);

  /// [v, v]
  static Interval point(double v) { return make(v, v); }

  static Interval unknown() noexcept { return Interval(0.0, 1.0); }
  static Interval zero() noexcept { return Interval(0.0, 0.0); }
  static Interval one() noexcept { return Interval(1.0, 1.0); }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double midpoint() const noexcept { return (lo_ + hi_) / 2.0; }
  double width() const noexcept { return hi_ - lo_; }
  bool degenerate() const noexcept { return lo_ == hi_; }

  /// Exact endpoint equality.
  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}

  double lo_;
  double hi_;
};

/// Endpoint-wise equality within eps.
bool approx_equal(const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

/// Result of comparing x against y under one ordering.
enum class Verdict {
  StrictlyLess,
  StrictlyGreater,
  Equivalent,    // x <= y and y <= x, x != y; only produced by the preorders
  Equal,
  Incomparable,  // only produced by the bilattice orders
};

const char* to_string(Verdict v) noexcept;

/// True when the verdict means "x <= y" holds.
bool holds_leq(Verdict v) noexcept;

/// The four orderings on intervals: bilattice truth/knowledge and the
/// midpoint/width preorders.
enum class Ordering { Truth, Knowledge, TruthPreorder, KnowledgePreorder };

/// "t", "k", "tp", "kp".
const char* to_string(Ordering o) noexcept;

/// x <=_t y iff x.lo <= y.lo and x.hi <= y.hi.
Verdict cmp_t_bilattice(const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

/// x <=_k y iff y is a subset of x.
Verdict cmp_k_bilattice(const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

/// x <=_tp y iff midpoint(x) <= midpoint(y). Total; never Incomparable.
Verdict cmp_tp(const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

/// x <=_kp y iff width(x) >= width(y). Total; never Incomparable.
Verdict cmp_kp(const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

Verdict compare(Ordering o, const Interval& x, const Interval& y, double eps = kEpsilon) noexcept;

/// Member with maximal midpoint; midpoint ties go to the narrower member.
/// Throws std::invalid_argument on empty input and IndecisionError when two
/// distinct intervals tie on both midpoint and width.
Interval lub_tp(std::span<const Interval> xs, double eps = kEpsilon);

/// The unique narrowest member. Throws IndecisionError when two distinct
/// members share the minimal width.
Interval lub_kp(std::span<const Interval> xs, double eps = kEpsilon);

/// Bilattice knowledge join (interval intersection). Throws
/// InconsistentError when the intervals are disjoint.
Interval k_join_bilattice(const Interval& x, const Interval& y);

/// All intervals sharing one midpoint.
class MSet {
 public:
  /// Throws OutOfRangeError unless center is in [0,1].
  static MSet of(double center);

  double center() const noexcept { return center_; }
  bool contains(const Interval& x, double eps = kEpsilon) const noexcept;
  /// [center, center]; always a member.
  Interval canonical() const noexcept;
  /// [max(0, 2c-1), min(1, 2c)]
  Interval widest() const noexcept;

  friend bool operator==(const MSet&, const MSet&) = default;

 private:
  explicit MSet(double c) noexcept : center_(c) {}
  double center_;
};

inline MSet m_set_of(double center) { return MSet::of(center); }
inline bool m_set_contains(const MSet& d, const Interval& x) { return d.contains(x); }

/// Every interval whose endpoints are drawn from `points` (lo <= hi).
std::vector<Interval> intervals_over(std::span<const double> points);

/// Members u of `universe` with u >_tp every element of `of`, keeping only
/// those of minimal midpoint.
std::vector<Interval> minimal_strict_upper_bounds_tp(std::span<const Interval> universe,
                                                     std::span<const Interval> of,
                                                     double eps = kEpsilon);

/// Dual of minimal_strict_upper_bounds_tp.
std::vector<Interval> maximal_strict_lower_bounds_tp(std::span<const Interval> universe,
                                                     std::span<const Interval> of,
                                                     double eps = kEpsilon);

}  // namespace ptri
