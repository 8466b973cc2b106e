#pragma once

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ptri/format.hpp"
#include "ptri/interval.hpp"

namespace ptri::test {

inline Interval iv(double lo, double hi) { return Interval::make(lo, hi); }
inline Interval pt(double v) { return Interval::point(v); }

inline ::testing::AssertionResult near_interval(const Interval& actual, const Interval& expected,
                                                double tol = kEpsilon) {
  if (approx_equal(actual, expected, tol)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << to_string_exact(actual) << ", expected "
                                       << to_string_exact(expected) << " (tol " << tol << ")";
}

/// Uniformly random valid interval; a quarter of them degenerate.
inline Interval random_interval(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double a = unit(gen);
  double b = std::uniform_int_distribution<int>(0, 3)(gen) == 0 ? a : unit(gen);
  if (a > b) std::swap(a, b);
  return Interval::make(a, b);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string program_path(const std::string& name) {
  return std::string(PTRI_PROGRAMS_DIR) + "/" + name;
}

}  // namespace ptri::test
