#include "ptri/rule_lang.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ptri/error.hpp"
#include "ptri/format.hpp"

namespace ptri {

namespace {

enum class Tok {
  Ident,
  Number,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Period,
  Equals,
  Arrow,
  Tilde,
  Compare,
  Bad,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;  // one past the last character
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= s_.size()) {
        t.kind = Tok::End;
        t.end_line = line_;
        t.end_column = col_;
        out.push_back(t);
        return out;
      }
      const std::size_t start = pos_;
      lex_one(t);
      t.text = std::string(s_.substr(start, pos_ - start));
      t.end_line = line_;
      t.end_column = col_;
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void lex_one(Token& t) {
    const char c = peek();
    if (ident_start(c)) {
      while (ident_char(peek())) advance();
      t.kind = Tok::Ident;
      return;
    }
    if (digit(c) || (c == '.' && digit(peek(1))) || (c == '-' && (digit(peek(1)) || peek(1) == '.'))) {
      lex_number();
      t.kind = Tok::Number;
      return;
    }
    if ((c == '<' || c == '>') && peek(1) == '=') {
      advance();
      advance();
      while (std::isalpha(static_cast<unsigned char>(peek()))) advance();
      t.kind = Tok::Compare;
      return;
    }
    if (c == '<' && peek(1) == '-') {
      advance();
      advance();
      t.kind = Tok::Arrow;
      return;
    }
    advance();
    switch (c) {
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case '.': t.kind = Tok::Period; break;
      case '=': t.kind = Tok::Equals; break;
      case '~': t.kind = Tok::Tilde; break;
      default: t.kind = Tok::Bad; break;
    }
  }

  // A '.' belongs to the number only when a digit follows, so "a = 1." ends
  // the statement.
  void lex_number() {
    if (peek() == '-') advance();
    while (digit(peek())) advance();
    if (peek() == '.' && digit(peek(1))) {
      advance();
      while (digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && digit(peek(2))))) {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (digit(peek())) advance();
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Failure {
  Diagnostic diagnostic;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Atom single_atom() {
    try {
      Atom a = atom("an atom");
      if (peek().kind != Tok::End) fail_at(peek(), "unexpected " + describe(peek()) + " after the atom");
      return a;
    } catch (const Failure& f) {
      throw ParseError({f.diagnostic});
    }
  }

  Program run() {
    Program p;
    while (peek().kind != Tok::End) {
      try {
        p.rules.push_back(statement());
      } catch (const Failure& f) {
        diagnostics_.push_back(f.diagnostic);
        recover();
      }
    }
    if (!diagnostics_.empty()) throw ParseError(diagnostics_);
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] static void fail_at(const Token& t, std::string message) {
    throw Failure{{t.line, t.column, std::move(message)}};
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail_at(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }

  void recover() {
    if (skip_to_period_) {
      while (peek().kind != Tok::End && peek().kind != Tok::Period) take();
      if (peek().kind == Tok::Period) take();
    }
    skip_to_period_ = true;
  }

  WeightedRule statement() {
    skip_to_period_ = true;
    WeightedRule r;
    if (peek().kind == Tok::Tilde) {
      take();
      r.head_negated = true;
    }
    r.head = atom("a head atom");
    if (peek().kind == Tok::Equals) {
      take();
      r.weight = interval();
    } else if (peek().kind == Tok::Arrow) {
      take();
      expect(Tok::LBracket, "'[' opening the rule weight");
      r.weight = interval();
      expect(Tok::RBracket, "']' closing the rule weight");
      r.body = body();
    } else {
      fail_at(peek(), "expected '=' or '<-' after " + r.head.text() + ", found " + describe(peek()));
    }
    end_statement();
    return r;
  }

  void end_statement() {
    if (peek().kind == Tok::Period) {
      take();
      return;
    }
    const Token& last = previous();
    // A statement that stops at the end of a line is taken as complete, so
    // the next line still gets parsed.
    skip_to_period_ = peek().kind != Tok::End && peek().line == last.end_line;
    throw Failure{{last.end_line, last.end_column, "missing '.' at end of statement"}};
  }

  Atom atom(const char* what) {
    const Token& name = peek();
    if (name.kind != Tok::Ident) fail_at(name, std::string("expected ") + what + ", found " + describe(name));
    if (name.text == "not" || name.text == "neg") {
      fail_at(name, "'" + name.text + "' is a keyword and cannot name an atom");
    }
    take();
    Atom a{name.text, {}};
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident) {
      take();
      a.args.push_back(take().text);
      while (peek().kind == Tok::Comma) {
        take();
        a.args.push_back(expect(Tok::Ident, "an argument name").text);
      }
      expect(Tok::RParen, "')' closing the argument list");
    }
    return a;
  }

  double number_or_malformed(const Token& start) {
    const Token& t = peek();
    if (t.kind != Tok::Number) {
      fail_at(t, "malformed interval starting at " + std::to_string(start.line) + ":" +
                     std::to_string(start.column) + ": expected a number, found " + describe(t));
    }
    take();
    double v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) fail_at(t, "malformed number '" + t.text + "'");
    return v;
  }

  Interval interval() {
    const Token start = peek();
    double lo = 0;
    double hi = 0;
    if (start.kind == Tok::LBracket) {
      take();
      lo = number_or_malformed(start);
      if (peek().kind != Tok::Comma) {
        fail_at(peek(), "malformed interval: expected ',' between endpoints, found " + describe(peek()));
      }
      take();
      hi = number_or_malformed(start);
      if (peek().kind != Tok::RBracket) {
        fail_at(peek(), "malformed interval: expected ']', found " + describe(peek()));
      }
      take();
    } else if (start.kind == Tok::Number) {
      lo = hi = number_or_malformed(start);
    } else {
      fail_at(start, "malformed interval: expected '[lo,hi]' or a number, found " + describe(start));
    }
    try {
      return Interval::make(lo, hi);
    } catch (const Error& e) {
      fail_at(start, std::string("malformed interval: ") + e.what());
    }
  }

  BodyExpr body() {
    std::vector<BodyExpr> items;
    items.push_back(conjunct(true));
    while (peek().kind == Tok::Comma) {
      take();
      items.push_back(conjunct(true));
    }
    return BodyExpr::conj(std::move(items));
  }

  BodyExpr conjunct(bool top_level) {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "not") {
      if (!top_level) fail_at(t, "'not' may only appear at the top level of a rule body");
      take();
      return BodyExpr::naf(atom("an atom after 'not'"));
    }
    if (t.kind == Tok::Ident && t.text == "neg") {
      take();
      return BodyExpr::neg(conjunct(false));
    }
    if (t.kind == Tok::LParen) return guard();
    return BodyExpr::atom(atom("a body atom"));
  }

  BodyExpr guard() {
    take();
    Atom left = atom("an atom on the left of the comparison");
    const Token& cmp = peek();
    if (cmp.kind != Tok::Compare) {
      fail_at(cmp, "expected a comparator (<=tp, <=kp, <=t, <=k), found " + describe(cmp));
    }
    const bool flipped = cmp.text[0] == '>';
    const std::string_view suffix = std::string_view(cmp.text).substr(2);
    Ordering o{};
    if (suffix == "tp") {
      o = Ordering::TruthPreorder;
    } else if (suffix == "kp") {
      o = Ordering::KnowledgePreorder;
    } else if (suffix == "t") {
      o = Ordering::Truth;
    } else if (suffix == "k") {
      o = Ordering::Knowledge;
    } else {
      fail_at(cmp, "unknown comparator '" + cmp.text + "'");
    }
    take();
    std::variant<Atom, Interval> right = Interval::unknown();
    if (peek().kind == Tok::Ident) {
      right = atom("an atom on the right of the comparison");
    } else {
      right = interval();
    }
    expect(Tok::RParen, "')' closing the comparison");
    return BodyExpr::guard(o, std::move(left), std::move(right), flipped);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
  bool skip_to_period_ = true;
};

std::string render_conjunct(const BodyExpr& e);

std::string render_guard(const BodyExpr::Guard& g) {
  std::string out = "(" + g.left.text() + " " + (g.flipped ? ">=" : "<=") + to_string(g.ordering) + " ";
  if (const auto* a = std::get_if<Atom>(&g.right)) {
    out += a->text();
  } else {
    out += to_string_exact(std::get<Interval>(g.right));
  }
  return out + ")";
}

std::string render_conjunct(const BodyExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BodyExpr::AtomRef>) {
          return n.atom.text();
        } else if constexpr (std::is_same_v<T, BodyExpr::Conj>) {
          if (n.items.size() != 1) {
            throw std::invalid_argument("a nested conjunction has no text form");
          }
          return render_conjunct(n.items.front());
        } else if constexpr (std::is_same_v<T, BodyExpr::Neg>) {
          return "neg " + render_conjunct(*n.operand);
        } else if constexpr (std::is_same_v<T, BodyExpr::Guard>) {
          return render_guard(n);
        } else {
          return "not " + n.atom.text();
        }
      },
      e.node());
}

std::vector<Token> tokenize(std::string_view text) {
  auto tokens = Lexer(text).run();
  std::vector<Diagnostic> diags;
  for (const auto& t : tokens) {
    if (t.kind == Tok::Bad) diags.push_back({t.line, t.column, "unexpected character '" + t.text + "'"});
  }
  // Stray characters are reported up front; the parser would only see noise.
  if (!diags.empty()) throw ParseError(std::move(diags));
  return tokens;
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(tokenize(text)).run(); }

Atom parse_atom(std::string_view text) { return Parser(tokenize(text)).single_atom(); }

std::string to_text(const BodyExpr& e) {
  if (const auto* c = std::get_if<BodyExpr::Conj>(&e.node())) {
    std::string out;
    for (const auto& item : c->items) {
      if (!out.empty()) out += ", ";
      out += render_conjunct(item);
    }
    return out;
  }
  return render_conjunct(e);
}

std::string to_text(const WeightedRule& r) {
  std::string out = (r.head_negated ? "~" : "") + r.head.text();
  if (r.is_fact()) return out + " = " + to_string_exact(r.weight) + ".";
  return out + " <- [" + to_string_exact(r.weight) + "] " + to_text(r.body) + ".";
}

std::string to_text(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += to_text(r) + "\n";
  return out;
}

std::string format_valuation_text(const Valuation& v) {
  std::string out;
  for (const auto& [atom, x] : v.entries()) out += atom.text() + ": " + to_string(x) + "\n";
  return out;
}

std::string format_valuation_json(const Valuation& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [atom, x] : v.entries()) {
    j[atom.text()] = {display_round(x.lo()), display_round(x.hi())};
  }
  return j.dump();
}

}  // namespace ptri
