#include "ptri/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "ptri/error.hpp"
#include "ptri/format.hpp"

namespace ptri {

std::string_view to_string(HeadCombiner c) noexcept {
  switch (c) {
    case HeadCombiner::LubTp: return "lub_tp";
    case HeadCombiner::LubKp: return "lub_kp";
    case HeadCombiner::KJoin: return "kjoin";
  }
  return "?";
}

namespace {

OperatorId binary_id_or_throw(std::string_view key, std::string_view value) {
  const auto id = parse_operator_id(value);
  if (!id || !is_binary(*id)) {
    throw std::invalid_argument("config " + std::string(key) + ": '" + std::string(value) +
                                "' is not a binary operator");
  }
  return *id;
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config " + std::string(key) + ": '" + std::string(value) +
                                "' is not a number");
  }
  return out;
}

}  // namespace

void set_config_option(EngineConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "conjunctor") {
    cfg.conjunctor = binary_id_or_throw(key, value);
  } else if (key == "rule_application") {
    cfg.rule_application = binary_id_or_throw(key, value);
  } else if (key == "head_combiner") {
    if (value == "lub_tp") {
      cfg.head_combiner = HeadCombiner::LubTp;
    } else if (value == "lub_kp") {
      cfg.head_combiner = HeadCombiner::LubKp;
    } else if (value == "kjoin") {
      cfg.head_combiner = HeadCombiner::KJoin;
    } else {
      throw std::invalid_argument("config head_combiner: expected lub_tp, lub_kp or kjoin, got '" +
                                  std::string(value) + "'");
    }
  } else if (key == "max_iterations") {
    const int n = parse_number<int>(key, value);
    if (n < 1) throw std::invalid_argument("config max_iterations must be positive");
    cfg.max_iterations = n;
  } else if (key == "epsilon") {
    const double e = parse_number<double>(key, value);
    if (!(e >= 0.0)) throw std::invalid_argument("config epsilon must be non-negative");
    cfg.epsilon = e;
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

Interval Valuation::state(const Atom& a) const {
  auto it = states_.find(a);
  return it == states_.end() ? Interval::unknown() : it->second;
}

Interval evaluate_body(const Valuation& v, const BodyExpr& e, const EngineConfig& cfg) {
  return std::visit(
      [&](const auto& n) -> Interval {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BodyExpr::AtomRef>) {
          return v.state(n.atom);
        } else if constexpr (std::is_same_v<T, BodyExpr::Conj>) {
          if (n.items.empty()) return Interval::one();
          const auto conj = binary_operator(cfg.conjunctor);
          Interval acc = evaluate_body(v, n.items.front(), cfg);
          for (std::size_t i = 1; i < n.items.size(); ++i) {
            acc = conj(acc, evaluate_body(v, n.items[i], cfg));
          }
          return acc;
        } else if constexpr (std::is_same_v<T, BodyExpr::Neg>) {
          return negate_standard(evaluate_body(v, *n.operand, cfg));
        } else if constexpr (std::is_same_v<T, BodyExpr::Guard>) {
          const Interval left = v.state(n.left);
          const Interval right = std::holds_alternative<Atom>(n.right)
                                     ? v.state(std::get<Atom>(n.right))
                                     : std::get<Interval>(n.right);
          const Verdict verdict = n.flipped ? compare(n.ordering, right, left, cfg.epsilon)
                                            : compare(n.ordering, left, right, cfg.epsilon);
          return holds_leq(verdict) ? Interval::one() : Interval::zero();
        } else {
          static_assert(std::is_same_v<T, BodyExpr::Naf>);
          const bool fails = approx_equal(v.state(n.atom), Interval::unknown(), cfg.epsilon);
          return fails ? Interval::one() : Interval::zero();
        }
      },
      e.node());
}

Interval fire_rule(const Valuation& v, const WeightedRule& r, const EngineConfig& cfg) {
  return binary_operator(cfg.rule_application)(evaluate_body(v, r.body, cfg), r.weight);
}

namespace {

bool informative(const Interval& body, double eps) {
  return !approx_equal(body, Interval::zero(), eps) && !approx_equal(body, Interval::unknown(), eps);
}

// Fired values of the applicable rules concluding q (or ~q).
std::vector<Interval> candidates(const Program& p, const Valuation& v, const Atom& q, bool negated,
                                 const EngineConfig& cfg) {
  const auto apply = binary_operator(cfg.rule_application);
  std::vector<Interval> out;
  for (const auto& r : p.rules) {
    if (r.head_negated != negated || r.head != q) continue;
    const Interval body = evaluate_body(v, r.body, cfg);
    if (informative(body, cfg.epsilon)) out.push_back(apply(body, r.weight));
  }
  return out;
}

Interval knowledge_fold(const std::vector<Interval>& xs) {
  Interval acc = Interval::unknown();
  for (const auto& x : xs) acc = k_join_bilattice(acc, x);
  return acc;
}

Interval merge(const std::vector<Interval>& xs, const EngineConfig& cfg) {
  switch (cfg.head_combiner) {
    case HeadCombiner::LubTp: return lub_tp(xs, cfg.epsilon);
    case HeadCombiner::LubKp: return lub_kp(xs, cfg.epsilon);
    case HeadCombiner::KJoin: return knowledge_fold(xs);
  }
  return lub_tp(xs, cfg.epsilon);
}

}  // namespace

bool rule_applicable(const Valuation& v, const WeightedRule& r, const EngineConfig& cfg) {
  return informative(evaluate_body(v, r.body, cfg), cfg.epsilon);
}

Interval cl_plus(const Program& p, const Valuation& v, const Atom& q, const EngineConfig& cfg) {
  return knowledge_fold(candidates(p, v, q, false, cfg));
}

Interval cl_minus(const Program& p, const Valuation& v, const Atom& q, const EngineConfig& cfg) {
  return negate_standard(knowledge_fold(candidates(p, v, q, true, cfg)));
}

Interval combine_evidence(const Interval& pos, const Interval& neg, double eps) {
  const Interval both[] = {pos, neg};
  return lub_kp(both, eps);
}

std::optional<Interval> head_state(const Program& p, const Valuation& v, const Atom& q,
                                   const EngineConfig& cfg) {
  const auto pos = candidates(p, v, q, false, cfg);
  const auto neg = candidates(p, v, q, true, cfg);
  try {
    std::optional<Interval> pos_part, neg_part;
    if (!pos.empty()) pos_part = merge(pos, cfg);
    if (!neg.empty()) neg_part = negate_standard(merge(neg, cfg));
    if (pos_part && neg_part) return combine_evidence(*pos_part, *neg_part, cfg.epsilon);
    return pos_part ? pos_part : neg_part;
  } catch (const IndecisionError& e) {
    throw IndecisionError(q.text() + ": " + e.what(), e.tied(), q.text());
  } catch (const InconsistentError& e) {
    throw InconsistentError(q.text() + ": " + e.what(), q.text());
  }
}

Valuation consequence_step(const Program& p, const Valuation& v, const EngineConfig& cfg) {
  std::set<Atom> heads;
  for (const auto& r : p.rules) heads.insert(r.head);
  Valuation out;
  for (const auto& q : heads) {
    if (auto s = head_state(p, v, q, cfg)) out.set(q, *s);
  }
  return out;
}

namespace {

// Dependency analysis and stratum-by-stratum evaluation.
class Solver {
 public:
  Solver(const Program& p, const EngineConfig& cfg) : program_(p), cfg_(cfg) {
    std::set<Atom> all;
    for (const auto& r : p.rules) {
      all.insert(r.head);
      r.body.for_each_atom([&](const Atom& a, bool) { all.insert(a); });
    }
    atoms_.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i], static_cast<int>(i));

    const std::size_t n = atoms_.size();
    edges_.resize(n);
    is_head_.assign(n, false);
    for (const auto& r : p.rules) {
      const int h = index_.at(r.head);
      is_head_[h] = true;
      r.body.for_each_atom([&](const Atom& a, bool naf) { add_edge(h, index_.at(a), naf); });
    }
    stratum_.assign(n, -1);
  }

  void assign_strata() {
    for (const auto& component : components()) assign(component);
  }

  Strata strata() const {
    const int top = stratum_.empty() ? -1 : *std::max_element(stratum_.begin(), stratum_.end());
    Strata out;
    for (int s = 0; s <= top; ++s) {
      std::vector<Atom> layer;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (stratum_[i] == s) layer.push_back(atoms_[i]);
      }
      if (!layer.empty()) out.push_back(std::move(layer));
    }
    return out;
  }

  // Evaluates every stratum whose atoms satisfy `include`.
  Valuation evaluate(const std::function<bool(int)>& include, int* steps) const {
    Valuation v;
    const int top = stratum_.empty() ? -1 : *std::max_element(stratum_.begin(), stratum_.end());
    for (int s = 0; s <= top; ++s) {
      std::vector<int> layer;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (stratum_[i] == s && is_head_[i] && include(static_cast<int>(i))) {
          layer.push_back(static_cast<int>(i));
        }
      }
      if (!layer.empty()) fixpoint(v, layer, steps);
    }
    return v;
  }

  void check_deferred(const Valuation& v) const {
    for (const auto& [from, to] : deferred_) {
      if (v.derived(atoms_[to]) &&
          !approx_equal(v.state(atoms_[to]), Interval::unknown(), cfg_.epsilon)) {
        throw StratificationError("guard ordering put " + atoms_[from].text() + " before " +
                                  atoms_[to].text() + ", but " + atoms_[to].text() +
                                  " was derived afterwards");
      }
    }
  }

 private:
  struct Edge {
    int to;
    bool naf;
  };

  void add_edge(int from, int to, bool naf) {
    for (auto& e : edges_[from]) {
      if (e.to == to) {
        e.naf = e.naf || naf;
        return;
      }
    }
    edges_[from].push_back({to, naf});
  }

  // Tarjan's algorithm; components come out dependencies first.
  std::vector<std::vector<int>> components() const {
    const int n = static_cast<int>(atoms_.size());
    std::vector<int> order(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> out;
    int counter = 0;

    std::function<void(int)> visit = [&](int u) {
      order[u] = low[u] = counter++;
      stack.push_back(u);
      on_stack[u] = true;
      for (const auto& e : edges_[u]) {
        if (order[e.to] < 0) {
          visit(e.to);
          low[u] = std::min(low[u], low[e.to]);
        } else if (on_stack[e.to]) {
          low[u] = std::min(low[u], order[e.to]);
        }
      }
      if (low[u] == order[u]) {
        std::vector<int> comp;
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != u);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    };
    for (int u = 0; u < n; ++u) {
      if (order[u] < 0) visit(u);
    }
    return out;
  }

  std::string names(const std::vector<int>& ids) const {
    std::string s;
    for (int i : ids) {
      if (!s.empty()) s += ", ";
      s += atoms_[i].text();
    }
    return s;
  }

  void assign(const std::vector<int>& comp) {
    const std::set<int> members(comp.begin(), comp.end());
    int base = 0;
    bool internal_naf = false;
    for (int u : comp) {
      for (const auto& e : edges_[u]) {
        if (members.contains(e.to)) {
          internal_naf = internal_naf || e.naf;
        } else {
          base = std::max(base, stratum_[e.to] + (e.naf ? 1 : 0));
        }
      }
    }
    if (!internal_naf) {
      for (int u : comp) stratum_[u] = base;
      return;
    }
    resolve_with_guards(comp, members, base);
  }

  // A negation-as-failure cycle: let applicable guard rules over atoms
  // outside the cycle decide which members are settled first.
  void resolve_with_guards(const std::vector<int>& comp, const std::set<int>& members, int base) {
    const Valuation below = evaluate([&](int i) { return stratum_[i] >= 0; }, nullptr);

    std::set<int> first;
    for (const auto& r : program_.rules) {
      const int h = index_.at(r.head);
      if (!members.contains(h) || !r.body.contains_guard()) continue;
      bool external = true;
      r.body.for_each_atom([&](const Atom& a, bool) {
        external = external && !members.contains(index_.at(a));
      });
      if (external && rule_applicable(below, r, cfg_)) first.insert(h);
    }
    if (first.empty() || first.size() == comp.size()) {
      throw StratificationError("negation-as-failure cycle through " + names(comp) +
                                (first.empty() ? " (no applicable guard rule orders it)"
                                               : " (guard rules do not single out an atom)"));
    }

    for (int u : comp) {
      for (const auto& e : edges_[u]) {
        if (!members.contains(e.to)) continue;
        const bool same_group = first.contains(u) == first.contains(e.to);
        if (same_group && e.naf) {
          throw StratificationError("negation-as-failure cycle through " + names(comp) +
                                    " is not broken by its guard rules");
        }
        if (!same_group && !e.naf) {
          throw StratificationError("guard rules cannot split the positive cycle through " +
                                    names(comp));
        }
        if (first.contains(u) && !first.contains(e.to)) deferred_.emplace_back(u, e.to);
      }
    }
    for (int u : comp) stratum_[u] = base + (first.contains(u) ? 1 : 2);
  }

  void fixpoint(Valuation& v, const std::vector<int>& layer, int* steps) const {
    for (int iter = 1;; ++iter) {
      std::vector<std::optional<Interval>> next;
      next.reserve(layer.size());
      for (int i : layer) next.push_back(head_state(program_, v, atoms_[i], cfg_));

      double residual = 0;
      int worst = layer.front();
      for (std::size_t k = 0; k < layer.size(); ++k) {
        const Atom& a = atoms_[layer[k]];
        double change = 0;
        if (next[k].has_value() != v.derived(a)) {
          change = 1.0;
        } else if (next[k]) {
          const Interval old = v.state(a);
          change = std::max(std::fabs(old.lo() - next[k]->lo()), std::fabs(old.hi() - next[k]->hi()));
        }
        if (change > residual) {
          residual = change;
          worst = layer[k];
        }
        if (next[k]) {
          v.set(a, *next[k]);
        } else {
          v.erase(a);
        }
      }
      if (steps) ++*steps;
      if (residual <= cfg_.epsilon) return;
      if (iter >= cfg_.max_iterations) {
        throw NonConvergenceError("no fixpoint after " + std::to_string(iter) +
                                      " iterations; " + atoms_[worst].text() +
                                      " still moved by " + format_number(residual),
                                  atoms_[worst].text(), residual);
      }
    }
  }

  const Program& program_;
  const EngineConfig& cfg_;
  std::vector<Atom> atoms_;
  std::map<Atom, int> index_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> is_head_;
  std::vector<int> stratum_;
  std::vector<std::pair<int, int>> deferred_;
};

}  // namespace

Strata stratify(const Program& p, const EngineConfig& cfg) {
  Solver solver(p, cfg);
  solver.assign_strata();
  return solver.strata();
}

Solution solve_detailed(const Program& p, const EngineConfig& cfg) {
  Solver solver(p, cfg);
  solver.assign_strata();
  Solution out;
  out.valuation = solver.evaluate([](int) { return true; }, &out.iterations);
  solver.check_deferred(out.valuation);
  out.strata = solver.strata();
  return out;
}

}  // namespace ptri
