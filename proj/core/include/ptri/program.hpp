#pragma once

#include <compare>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ptri/interval.hpp"

namespace ptri {

/// A ground atom such as `cold` or `equal(a,b)`.
struct Atom {
  std::string name;
  std::vector<std::string> args;

  /// "name" or "name(a,b)"; also the sort key for output.
  std::string text() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom& a, const Atom& b) { return a.text() <=> b.text(); }
};

/// Interval-valued rule bodies.
class BodyExpr {
 public:
  struct AtomRef {
    Atom atom;
    friend bool operator==(const AtomRef&, const AtomRef&) = default;
  };
  /// Folded with the configured conjunctor; empty means [1,1].
  struct Conj {
    std::vector<BodyExpr> items;
    friend bool operator==(const Conj&, const Conj&) = default;
  };
  /// Standard negation of the operand's value.
  struct Neg {
    std::shared_ptr<const BodyExpr> operand;
    friend bool operator==(const Neg& a, const Neg& b) { return *a.operand == *b.operand; }
  };
  /// Crisp comparison of current states: [1,1] if it holds, else [0,0].
  /// `flipped` reads the comparison as left >= right.
  struct Guard {
    Ordering ordering;
    bool flipped = false;
    Atom left;
    std::variant<Atom, Interval> right;
    friend bool operator==(const Guard&, const Guard&) = default;
  };
  /// Negation as failure: [1,1] while the atom is underivable, else [0,0].
  struct Naf {
    Atom atom;
    friend bool operator==(const Naf&, const Naf&) = default;
  };

  using Node = std::variant<AtomRef, Conj, Neg, Guard, Naf>;

  BodyExpr(Node node) : node_(std::move(node)) {}  // NOLINT(google-explicit-constructor)

  static BodyExpr atom(Atom a) { return Node{AtomRef{std::move(a)}}; }
  static BodyExpr conj(std::vector<BodyExpr> items) { return Node{Conj{std::move(items)}}; }
  static BodyExpr neg(BodyExpr operand) {
    return Node{Neg{std::make_shared<const BodyExpr>(std::move(operand))}};
  }
  static BodyExpr guard(Ordering o, Atom left, std::variant<Atom, Interval> right,
                        bool flipped = false) {
    return Node{Guard{o, flipped, std::move(left), std::move(right)}};
  }
  static BodyExpr naf(Atom a) { return Node{Naf{std::move(a)}}; }
  static BodyExpr truth() { return Node{Conj{}}; }

  const Node& node() const noexcept { return node_; }

  /// Calls f on every atom the expression reads, with a flag telling
  /// whether the read is through negation as failure.
  template <class F>
  void for_each_atom(F&& f) const;

  bool contains_guard() const;

  friend bool operator==(const BodyExpr&, const BodyExpr&) = default;

 private:
  Node node_;
};

struct WeightedRule {
  Atom head;
  bool head_negated = false;
  BodyExpr body = BodyExpr::truth();
  Interval weight = Interval::one();

  /// Facts are rules with an empty conjunction body.
  bool is_fact() const;

  friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

struct Program {
  std::vector<WeightedRule> rules;

  friend bool operator==(const Program&, const Program&) = default;
};

template <class F>
void BodyExpr::for_each_atom(F&& f) const {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomRef>) {
          f(n.atom, false);
        } else if constexpr (std::is_same_v<T, Conj>) {
          for (const auto& item : n.items) item.for_each_atom(f);
        } else if constexpr (std::is_same_v<T, Neg>) {
          n.operand->for_each_atom(f);
        } else if constexpr (std::is_same_v<T, Guard>) {
          f(n.left, false);
          if (const auto* a = std::get_if<Atom>(&n.right)) f(*a, false);
        } else if constexpr (std::is_same_v<T, Naf>) {
          f(n.atom, true);
        }
      },
      node_);
}

}  // namespace ptri
