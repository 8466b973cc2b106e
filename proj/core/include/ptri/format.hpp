#pragma once

#include <string>
#include <string_view>

#include "ptri/interval.hpp"

namespace ptri {

/// Decimal rendering used for display: at most 10 significant digits,
/// trailing zeros dropped ("0.32", "1", "0.8333333333").
std::string format_number(double v);

/// Shortest decimal string that reads back to exactly `v`.
std::string format_number_exact(double v);

/// "[lo,hi]" with format_number endpoints.
std::string to_string(const Interval& x);

/// "[lo,hi]" with exact endpoints; used where text must read back bit-identically.
std::string to_string_exact(const Interval& x);

/// Parses "[lo,hi]" or a bare number (shorthand for [v,v]). Surrounding
/// whitespace is ignored. Throws ParseError for malformed text and
/// OutOfRangeError / InvertedError for invalid endpoints.
Interval parse_interval(std::string_view text);

/// Rounds to the 10 significant digits shown by format_number.
double display_round(double v);

}  // namespace ptri
