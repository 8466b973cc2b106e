#pragma once

#include <string>
#include <string_view>

#include "ptri/engine.hpp"
#include "ptri/program.hpp"

namespace ptri {

/// Parses the rule language:
///
///   cold = [0.6,0.6].
///   ~equal(a,b) <- [[0.9,1]] distinct_features(a,b).
///   risky <- [[0.6,1]] (cold >=t [0.5,0.5]), wet.
///   dr2 <- [1] not dr1.
///
/// `%` starts a comment. Rule bodies are always stored as a top-level
/// conjunction. Throws ParseError carrying every diagnostic found; the
/// parser resynchronises at the next '.' after an error.
Program parse_program(std::string_view text);

/// Parses a single atom such as `equal(a,b)`. Throws ParseError.
Atom parse_atom(std::string_view text);

/// Renders p in the same language with exact number text, so that
/// parse_program(to_text(p)) == p.
std::string to_text(const Program& p);
std::string to_text(const WeightedRule& r);
std::string to_text(const BodyExpr& e);

/// One `name: [lo,hi]` line per derived atom, sorted by atom text.
std::string format_valuation_text(const Valuation& v);

/// {"atom": [lo, hi], ...} with sorted keys and display-rounded numbers.
std::string format_valuation_json(const Valuation& v);

}  // namespace ptri
