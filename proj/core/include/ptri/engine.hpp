#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ptri/interval.hpp"
#include "ptri/operators.hpp"
#include "ptri/program.hpp"

namespace ptri {

/// How the candidate states of several rules with the same head (and the
/// same sign) are merged.
enum class HeadCombiner {
  LubTp,  // highest midpoint, narrower on ties
  LubKp,  // narrowest
  KJoin,  // intersection, starting from [0,1]
};

std::string_view to_string(HeadCombiner c) noexcept;

struct EngineConfig {
  OperatorId conjunctor = OperatorId::TPr;
  OperatorId rule_application = OperatorId::TPr;
  HeadCombiner head_combiner = HeadCombiner::LubTp;
  int max_iterations = 100;
  double epsilon = kEpsilon;
};

/// Applies one `key=value` setting (conjunctor, rule_application,
/// head_combiner, max_iterations, epsilon). Throws std::invalid_argument.
void set_config_option(EngineConfig& cfg, std::string_view key, std::string_view value);

/// Atom -> epistemic state. Atoms not present are unknown ([0,1]).
class Valuation {
 public:
  using Map = std::map<Atom, Interval>;

  Interval state(const Atom& a) const;
  bool derived(const Atom& a) const { return states_.contains(a); }
  void set(const Atom& a, const Interval& x) { states_.insert_or_assign(a, x); }
  void erase(const Atom& a) { states_.erase(a); }

  const Map& entries() const noexcept { return states_; }
  bool empty() const noexcept { return states_.empty(); }
  std::size_t size() const noexcept { return states_.size(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Map states_;
};

/// Atom reads give the current state, Conj folds cfg.conjunctor (empty is
/// [1,1]), Neg applies the standard negation, Guard is crisp ([1,1]/[0,0])
/// and Naf(a) is [1,1] exactly when a's state is still [0,1].
Interval evaluate_body(const Valuation& v, const BodyExpr& e, const EngineConfig& cfg);

/// cfg.rule_application(evaluate_body(body), weight)
Interval fire_rule(const Valuation& v, const WeightedRule& r, const EngineConfig& cfg);

/// A rule contributes to its head only when its body carries information:
/// bodies evaluating to [0,0] (false) or [0,1] (unknown) are skipped.
bool rule_applicable(const Valuation& v, const WeightedRule& r, const EngineConfig& cfg);

/// Positive evidence for q: [0,1] knowledge-joined with every applicable
/// rule concluding q.
Interval cl_plus(const Program& p, const Valuation& v, const Atom& q, const EngineConfig& cfg);

/// Negative evidence for q: standard negation of the knowledge join of every
/// applicable rule concluding ~q.
Interval cl_minus(const Program& p, const Valuation& v, const Atom& q, const EngineConfig& cfg);

/// lub_kp of the two; throws IndecisionError on equal widths.
Interval combine_evidence(const Interval& pos, const Interval& neg, double eps = kEpsilon);

/// State of q after one consequence step over `v`: candidates of each sign
/// merged with cfg.head_combiner, the negative side negated, and the two
/// sides combined with combine_evidence. nullopt when no rule applies.
std::optional<Interval> head_state(const Program& p, const Valuation& v, const Atom& q,
                                   const EngineConfig& cfg);

/// head_state for every head atom of p.
Valuation consequence_step(const Program& p, const Valuation& v, const EngineConfig& cfg);

using Strata = std::vector<std::vector<Atom>>;

/// Ordered evaluation layers. Naf dependencies must point to a strictly
/// lower layer. A cycle through Naf is accepted only when guard rules of
/// the atoms on it, evaluated over the layers below, single out which atoms
/// come first; those go one layer up, the rest of the cycle one more.
/// Throws StratificationError otherwise.
Strata stratify(const Program& p, const EngineConfig& cfg = {});

struct Solution {
  Valuation valuation;
  Strata strata;
  int iterations = 0;  // consequence steps summed over all strata
};

/// Bottom-up fixpoint evaluation, stratum by stratum.
/// Throws NonConvergenceError, StratificationError, IndecisionError and
/// InconsistentError (the latter two carrying the offending atom).
Solution solve_detailed(const Program& p, const EngineConfig& cfg = {});

inline Valuation solve(const Program& p, const EngineConfig& cfg = {}) {
  return solve_detailed(p, cfg).valuation;
}

}  // namespace ptri
