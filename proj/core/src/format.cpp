#include "ptri/format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "ptri/error.hpp"

namespace ptri {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_number_exact(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return format_number(v);
  return std::string(buf, end);
}

double display_round(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string to_string(const Interval& x) {
  return "[" + format_number(x.lo()) + "," + format_number(x.hi()) + "]";
}

std::string to_string_exact(const Interval& x) {
  return "[" + format_number_exact(x.lo()) + "," + format_number_exact(x.hi()) + "]";
}

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? std::string("parse error") : to_string(diagnostics.front())),
      diagnostics_(std::move(diagnostics)) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  double number() {
    skip_ws();
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    double v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError({{1, static_cast<int>(pos_) + 1, what + " in interval '" + std::string(s_) + "'"}});
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Interval parse_interval(std::string_view text) {
  Cursor c(text);
  Interval result = Interval::unknown();
  if (c.eat('[')) {
    const double lo = c.number();
    if (!c.eat(',')) c.fail("expected ','");
    const double hi = c.number();
    if (!c.eat(']')) c.fail("expected ']'");
    result = Interval::make(lo, hi);
  } else {
    result = Interval::point(c.number());
  }
  if (!c.at_end()) c.fail("unexpected trailing text");
  return result;
}

}  // namespace ptri
