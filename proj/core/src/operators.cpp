#include "ptri/operators.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ptri/error.hpp"
#include "ptri/format.hpp"

namespace ptri {

Interval negate_standard(const Interval& x) { return Interval::make(1.0 - x.hi(), 1.0 - x.lo()); }

Interval negate_lifted(const UnitNegator& n, const Interval& x) {
  return Interval::make(n(x.hi()), n(x.lo()));
}

namespace {

// Index of v in {0, 1/3, 2/3, 1}.
int chain4_index(double v) {
  const double k = std::round(v * 3.0);
  if (k < 0 || k > 3 || std::fabs(v - k / 3.0) > kEpsilon) {
    throw DomainError("negator_n1: endpoint " + format_number(v) +
                      " is not in {0, 1/3, 2/3, 1}");
  }
  return static_cast<int>(k);
}

Interval chain4_interval(int lo, int hi) { return Interval::make(lo / 3.0, hi / 3.0); }

}  // namespace

Interval negator_n1(const Interval& x) {
  const int lo = chain4_index(x.lo());
  const int hi = chain4_index(x.hi());
  if (lo == 0 && hi == 3) return chain4_interval(1, 2);
  if (lo == 1 && hi == 2) return chain4_interval(0, 3);
  return chain4_interval(3 - hi, 3 - lo);
}

Interval t_min_p(const Interval& x, const Interval& y) {
  switch (cmp_tp(x, y)) {
    case Verdict::StrictlyLess: return x;
    case Verdict::StrictlyGreater: return y;
    default: break;
  }
  // Equal midpoints: the narrower interval. Midpoint and width together
  // determine an interval, so a width tie means x and y coincide.
  assert(std::fabs(x.width() - y.width()) > kEpsilon || approx_equal(x, y));
  return y.width() < x.width() ? y : x;
}

Interval s_min_p(const Interval& x, const Interval& y) {
  switch (cmp_tp(x, y)) {
    case Verdict::StrictlyLess: return y;
    case Verdict::StrictlyGreater: return x;
    default: break;
  }
  assert(std::fabs(x.width() - y.width()) > kEpsilon || approx_equal(x, y));
  return y.width() < x.width() ? y : x;
}

Interval t_min_bilattice(const Interval& x, const Interval& y) {
  return Interval::make(std::min(x.lo(), y.lo()), std::min(x.hi(), y.hi()));
}

Interval s_max_bilattice(const Interval& x, const Interval& y) {
  return Interval::make(std::max(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

Interval t_pr(const Interval& x, const Interval& y) {
  return Interval::make(x.lo() * y.lo(), x.hi() * y.hi());
}

Interval t_ppr(const Interval& x, const Interval& y) {
  return Interval::make(x.lo() * y.lo(), std::max(x.lo() * y.hi(), x.hi() * y.lo()));
}

Interval s_pr(const Interval& x, const Interval& y) {
  return Interval::make(1.0 - (1.0 - x.lo()) * (1.0 - y.lo()),
                        1.0 - (1.0 - x.hi()) * (1.0 - y.hi()));
}

Interval ImplicationResult::representative() const {
  if (const auto* x = std::get_if<Interval>(&value_)) return *x;
  return std::get<MSet>(value_).canonical();
}

std::string to_string(const ImplicationResult& r) {
  if (r.is_unique()) return to_string(r.interval());
  return "m-set(" + format_number(r.mset().center()) + ")";
}

Interval s_implicator(const BinaryOp& s, const UnaryOp& n, const Interval& x, const Interval& y) {
  return s(n(x), y);
}

ImplicationResult r_implicator_min(const Interval& x, const Interval& y, double eps) {
  if (holds_leq(cmp_tp(x, y, eps))) return Interval::one();
  return MSet::of(y.midpoint());
}

ImplicationResult r_implicator_pr(const Interval& x, const Interval& y, int steps, double eps) {
  if (steps < 1) throw std::invalid_argument("r_implicator_pr: steps must be positive");

  const double target = y.midpoint();
  double best_mid = -1.0;
  std::vector<Interval> best;
  for (int j = 0; j <= steps; ++j) {
    const double g2 = static_cast<double>(j) / steps;
    for (int i = 0; i <= j; ++i) {
      const double g1 = static_cast<double>(i) / steps;
      // midpoint of t_pr(x, [g1,g2]) against midpoint of y
      const double image_mid = (x.lo() * g1 + x.hi() * g2) / 2.0;
      if (image_mid > target + eps) continue;
      const double mid = (g1 + g2) / 2.0;
      if (mid > best_mid + eps) {
        best_mid = mid;
        best.clear();
      }
      if (std::fabs(mid - best_mid) <= eps) best.push_back(Interval::make(g1, g2));
    }
  }
  // g = [0,0] always qualifies, so `best` is never empty.
  if (best.size() == 1) return best.front();
  return MSet::of(best_mid);
}

std::optional<Interval> r_implicator_pr_closed_form(const Interval& x, const Interval& y) {
  const double xs = x.lo() + x.hi();
  const double ys = y.lo() + y.hi();
  if (xs <= ys) return Interval::one();

  const double ratio = ys / xs;
  const bool nested = (x.lo() <= y.lo() && y.hi() < x.hi()) || (y.lo() < x.lo() && x.hi() <= y.hi());
  if (!nested && y.hi() > 0 && x.hi() > 0 && y.lo() / y.hi() > x.lo() / x.hi()) {
    if (x.lo() <= 0) return std::nullopt;
    const double lo = y.lo() / x.lo();
    const double hi = y.hi() / x.hi();
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) return std::nullopt;
    return Interval::make(lo, hi);
  }
  return Interval::point(ratio);
}

std::string_view to_string(OperatorId id) noexcept {
  switch (id) {
    case OperatorId::Neg: return "neg";
    case OperatorId::TMin: return "tmin";
    case OperatorId::TMinP: return "tminp";
    case OperatorId::TPr: return "tpr";
    case OperatorId::TPpr: return "tppr";
    case OperatorId::SPr: return "spr";
    case OperatorId::SMax: return "smax";
    case OperatorId::SMinP: return "sminp";
    case OperatorId::IMin: return "imin";
    case OperatorId::IPr: return "ipr";
    case OperatorId::SImp: return "simp";
  }
  return "?";
}

std::optional<OperatorId> parse_operator_id(std::string_view name) noexcept {
  static constexpr std::array kAll = {OperatorId::Neg,  OperatorId::TMin,  OperatorId::TMinP,
                                      OperatorId::TPr,  OperatorId::TPpr,  OperatorId::SPr,
                                      OperatorId::SMax, OperatorId::SMinP, OperatorId::IMin,
                                      OperatorId::IPr,  OperatorId::SImp};
  for (auto id : kAll) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_binary(OperatorId id) noexcept { return id != OperatorId::Neg; }

BinaryOp binary_operator(OperatorId id) {
  switch (id) {
    case OperatorId::TMin: return t_min_bilattice;
    case OperatorId::TMinP: return t_min_p;
    case OperatorId::TPr: return t_pr;
    case OperatorId::TPpr: return t_ppr;
    case OperatorId::SPr: return s_pr;
    case OperatorId::SMax: return s_max_bilattice;
    case OperatorId::SMinP: return s_min_p;
    case OperatorId::IMin:
      return [](const Interval& x, const Interval& y) { return r_implicator_min(x, y).representative(); };
    case OperatorId::IPr:
      return [](const Interval& x, const Interval& y) { return r_implicator_pr(x, y).representative(); };
    case OperatorId::SImp:
      return [](const Interval& x, const Interval& y) {
        return s_implicator(s_pr, negate_standard, x, y);
      };
    case OperatorId::Neg: break;
  }
  throw std::invalid_argument("operator '" + std::string(to_string(id)) + "' is not binary");
}

}  // namespace ptri
