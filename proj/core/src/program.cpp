#include "ptri/program.hpp"

namespace ptri {

std::string Atom::text() const {
  std::string out = name;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ',';
      out += args[i];
    }
    out += ')';
  }
  return out;
}

bool BodyExpr::contains_guard() const {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Guard>) {
          return true;
        } else if constexpr (std::is_same_v<T, Conj>) {
          for (const auto& item : n.items) {
            if (item.contains_guard()) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Neg>) {
          return n.operand->contains_guard();
        } else {
          return false;
        }
      },
      node_);
}

bool WeightedRule::is_fact() const {
  const auto* c = std::get_if<BodyExpr::Conj>(&body.node());
  return c != nullptr && c->items.empty();
}

}  // namespace ptri
