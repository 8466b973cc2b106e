#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>

#include "ptri/interval.hpp"

namespace ptri {

/// A negator on ([0,1], <=). Must be side-effect free.
using UnitNegator = std::function<double(double)>;

using UnaryOp = std::function<Interval(const Interval&)>;
using BinaryOp = std::function<Interval(const Interval&, const Interval&)>;

// Negators ------------------------------------------------------------------

/// [1 - hi, 1 - lo]: keeps the width, reflects the midpoint about 0.5.
Interval negate_standard(const Interval& x);

/// [n(hi), n(lo)]. Throws InvertedError / OutOfRangeError if `n` is not a
/// decreasing map into [0,1].
Interval negate_lifted(const UnitNegator& n, const Interval& x);

/// Involutive negator on I({0, 1/3, 2/3, 1}) that swaps [0,1] and
/// [1/3,2/3] and is the standard negation elsewhere. Throws DomainError
/// when an endpoint is not in the chain.
Interval negator_n1(const Interval& x);

// Conjunctors and disjunctors -------------------------------------------------

/// The argument with the lower midpoint; on a midpoint tie the narrower one.
/// The result is always one of the arguments.
Interval t_min_p(const Interval& x, const Interval& y);

/// The argument with the higher midpoint; on a midpoint tie the narrower one.
Interval s_min_p(const Interval& x, const Interval& y);

/// Pointwise min / max of the endpoints.
Interval t_min_bilattice(const Interval& x, const Interval& y);
Interval s_max_bilattice(const Interval& x, const Interval& y);

/// [x1*y1, x2*y2]
Interval t_pr(const Interval& x, const Interval& y);
/// [x1*y1, max(x1*y2, x2*y1)]
Interval t_ppr(const Interval& x, const Interval& y);
/// [1-(1-x1)(1-y1), 1-(1-x2)(1-y2)]
Interval s_pr(const Interval& x, const Interval& y);

// Implicators ------------------------------------------------------------------

/// Output of an implicator: either a single interval, or a whole m-set when
/// the supremum under <=_tp is not unique.
class ImplicationResult {
 public:
  ImplicationResult(Interval x) : value_(x) {}  // NOLINT(google-explicit-constructor)
  ImplicationResult(MSet m) : value_(m) {}      // NOLINT(google-explicit-constructor)

  bool is_unique() const noexcept { return std::holds_alternative<Interval>(value_); }
  bool is_mset() const noexcept { return std::holds_alternative<MSet>(value_); }
  const Interval& interval() const { return std::get<Interval>(value_); }
  const MSet& mset() const { return std::get<MSet>(value_); }

  /// The interval itself, or the degenerate member of the m-set.
  Interval representative() const;

  friend bool operator==(const ImplicationResult&, const ImplicationResult&) = default;

 private:
  std::variant<Interval, MSet> value_;
};

std::string to_string(const ImplicationResult& r);

/// S(N(x), y)
Interval s_implicator(const BinaryOp& s, const UnaryOp& n, const Interval& x, const Interval& y);

/// Residuum of t_min_p under <=_tp: [1,1] when midpoint(x) <= midpoint(y),
/// otherwise the m-set centred on midpoint(y).
ImplicationResult r_implicator_min(const Interval& x, const Interval& y, double eps = kEpsilon);

/// Residuum of t_pr under <=_tp, found by exhaustive search over candidates
/// whose endpoints lie on the lattice {0, 1/steps, ..., 1}: the candidates
/// g with midpoint(t_pr(x, g)) <= midpoint(y) are collected and those of
/// maximal midpoint returned. Several maximisers collapse to their m-set.
ImplicationResult r_implicator_pr(const Interval& x, const Interval& y, int steps = 1000,
                                  double eps = kEpsilon);

/// Closed-form residuum of t_pr following the three-case analysis. Returns
/// nullopt when the selected candidate is not a valid interval.
std::optional<Interval> r_implicator_pr_closed_form(const Interval& x, const Interval& y);

// Operator identifiers ---------------------------------------------------------

/// Identifiers shared by the rule language, the engine config and the CLI.
enum class OperatorId { Neg, TMin, TMinP, TPr, TPpr, SPr, SMax, SMinP, IMin, IPr, SImp };

std::string_view to_string(OperatorId id) noexcept;
std::optional<OperatorId> parse_operator_id(std::string_view name) noexcept;
bool is_binary(OperatorId id) noexcept;

/// Binary form of `id`. Implicators yield their representative; `simp` is
/// the S-implicator of s_pr and negate_standard. Throws std::invalid_argument
/// for `neg`.
BinaryOp binary_operator(OperatorId id);

}  // namespace ptri
