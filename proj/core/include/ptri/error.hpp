#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptri/interval.hpp"

namespace ptri {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interval endpoint lies outside [0,1].
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// An interval was requested with lo > hi.
class InvertedError : public Error {
 public:
  using Error::Error;
};

/// Endpoints are not members of the finite chain an operator is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two intervals carry the same amount of information and no selection
/// rule can choose between them. `atom` is filled in by the rule engine.
class IndecisionError : public Error {
 public:
  IndecisionError(std::string message, std::vector<Interval> tied, std::string atom = {})
      : Error(std::move(message)), tied_(std::move(tied)), atom_(std::move(atom)) {}

  const std::vector<Interval>& tied() const noexcept { return tied_; }
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::vector<Interval> tied_;
  std::string atom_;
};

/// Knowledge join of disjoint intervals.
class InconsistentError : public Error {
 public:
  InconsistentError(std::string message, std::string atom = {})
      : Error(std::move(message)), atom_(std::move(atom)) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// A located problem found while reading text input. Positions are 1-based.
struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string to_string(const Diagnostic& d);

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class StratificationError : public Error {
 public:
  using Error::Error;
};

/// Fixpoint iteration hit its cap while some state still moved by more
/// than the configured epsilon.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(std::string message, std::string atom, double residual)
      : Error(std::move(message)), atom_(std::move(atom)), residual_(residual) {}

  const std::string& atom() const noexcept { return atom_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string atom_;
  double residual_;
};

}  // namespace ptri
