#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptri/interval.hpp"

namespace ptri {

/// Endpoints {0, step, 2*step, ..., 1} (1 is appended when step does not
/// divide it) and every interval over them. Throws std::invalid_argument
/// unless 0 < step <= 0.5. step = 0.05 gives 231 intervals.
std::vector<double> grid_points(double step);
std::vector<Interval> interval_grid(double step);

struct LawResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> counterexample;  // the first failure

  bool ok() const noexcept { return failed == 0; }
};

/// Checks the algebraic laws of the orderings and operators exhaustively
/// over interval_grid(step): preorder laws, the t => tp implication,
/// De Morgan triplets, the product t-norm midpoint inequality, negator,
/// t-norm/t-conorm and implicator boundary laws, monotonicity of the
/// selection t-norm, the stochastic reading of <=_tp, and m-set bounds.
std::vector<LawResult> run_law_suite(double step);

}  // namespace ptri
