#include "troplift/parse.hpp"

#include <cctype>
#include <set>

#include "troplift/errors.hpp"

namespace troplift {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*^/(),;:").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_symbol(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Symbol && peek(k).text == s;
  }
  bool at_header() const { return peek().kind == Tok::Ident && is_symbol(":", 1); }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(at.line, at.column, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(const char* s) {
    if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
    take();
  }

  Integer integer() {
    if (peek().kind != Tok::Number) fail("expected a number");
    return Integer(take().text);
  }

  Rational signed_rational() {
    bool neg = false;
    while (is_symbol("+") || is_symbol("-")) neg ^= take().text == "-";
    Integer num = integer();
    Integer den = 1;
    if (is_symbol("/")) {
      take();
      const Token& at = peek();
      den = integer();
      if (den == 0) fail("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  std::vector<std::string> identifiers() {
    std::vector<std::string> out;
    std::set<std::string> seen;
    do {
      if (!out.empty()) take();
      const Token& at = peek();
      if (at.kind != Tok::Ident) fail("expected a variable name");
      if (at.text == "t") fail("'t' is reserved for the series variable");
      if (!seen.insert(at.text).second) fail("duplicate variable '" + at.text + "'");
      out.push_back(take().text);
    } while (is_symbol(","));
    return out;
  }

  std::vector<Rational> rationals() {
    std::vector<Rational> out{signed_rational()};
    while (is_symbol(",")) {
      take();
      out.push_back(signed_rational());
    }
    return out;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  QPoly expr(const std::vector<std::string>& names) {
    const std::size_t n = names.size() + 1;
    QPoly acc(n);
    bool first = true;
    while (first || is_symbol("+") || is_symbol("-")) {
      bool neg = false;
      if (is_symbol("+") || is_symbol("-")) neg = take().text == "-";
      else if (!first) break;
      QPoly t = term(names);
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  QPoly term(const std::vector<std::string>& names) {
    QPoly acc = power(names);
    while (is_symbol("*")) {
      take();
      acc = acc * power(names);
    }
    return acc;
  }

  QPoly power(const std::vector<std::string>& names) {
    QPoly base = primary(names);
    if (!is_symbol("^")) return base;
    take();
    const Token& at = peek();
    if (is_symbol("-")) fail("negative exponent", at);
    Integer e = integer();
    if (is_symbol("/")) fail("fractional exponent", at);
    if (e > 1000) fail("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  QPoly primary(const std::vector<std::string>& names) {
    const std::size_t n = names.size() + 1;
    const Token& at = peek();
    if (is_symbol("(")) {
      take();
      QPoly inner = expr(names);
      expect(")");
      return inner;
    }
    if (is_symbol("-")) {
      take();
      return -power(names);
    }
    if (at.kind == Tok::Number) {
      Integer num = integer();
      Integer den = 1;
      if (is_symbol("/") && peek(1).kind == Tok::Number) {
        take();
        const Token& dt = peek();
        den = integer();
        if (den == 0) fail("zero denominator", dt);
      }
      Rational q(num, den);
      q.canonicalize();
      return QPoly::constant(n, q);
    }
    if (at.kind == Tok::Ident) {
      std::string name = take().text;
      if (name == "t") return QPoly::variable(n, 0);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return QPoly::variable(n, i + 1);
      fail("unknown variable '" + name + "'", at);
    }
    fail(at.kind == Tok::End ? "unexpected end of input" : "unexpected '" + at.text + "'", at);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ProblemInput parse_input(std::string_view text) {
  Parser p(text);
  ProblemInput out;
  bool have_vars = false, have_gens = false;
  while (!p.at_end()) {
    if (!p.at_header()) p.fail("expected a section header (vars:, gens:, omega:, order:, seed:)");
    Token head = p.take();
    p.take();
    if (head.text == "vars") {
      if (have_vars) p.fail("duplicate vars section", head);
      out.ctx.names = p.identifiers();
      have_vars = true;
    } else if (head.text == "gens") {
      if (!have_vars) p.fail("gens must follow vars", head);
      if (have_gens) p.fail("duplicate gens section", head);
      have_gens = true;
      while (!p.at_end() && !p.at_header()) {
        const Token& at = p.peek();
        QPoly g = p.expr(out.ctx.names);
        p.expect(";");
        if (g.is_zero()) p.fail("zero generator", at);
        out.gens.push_back(std::move(g));
      }
    } else if (head.text == "omega") {
      out.omega = WeightVector(p.rationals());
    } else if (head.text == "order") {
      Integer m = p.integer();
      if (m < 1 || m > 1000) p.fail("order must be a positive integer", head);
      out.order = static_cast<int>(m.get_si());
    } else if (head.text == "seed") {
      Integer s = p.integer();
      if (!s.fits_ulong_p()) p.fail("seed out of range", head);
      out.seed = s.get_ui();
    } else {
      p.fail("unknown section '" + head.text + "'", head);
    }
  }
  if (!have_vars) throw ParseError(1, 1, "missing vars section");
  if (out.omega && out.omega->size() != out.ctx.nvars())
    throw ParseError(1, 1, "omega has " + std::to_string(out.omega->size()) + " entries, expected " +
                               std::to_string(out.ctx.nvars()));
  return out;
}

QPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  Parser p(text);
  QPoly f = p.expr(names);
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

WeightVector parse_weight(std::string_view text) {
  Parser p(text);
  WeightVector w(p.rationals());
  if (!p.at_end()) p.fail("trailing input");
  return w;
}

}  // namespace troplift
