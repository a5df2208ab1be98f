#include "dreg/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dreg {

namespace {

constexpr int kMaxExponent = 1000;

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
    } else if (std::string_view("+-*^/(),;").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Symbol;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(src.substr(i, j - i));
    out.push_back(std::move(t));
    advance(j - i);
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t nvars) : toks_(std::move(toks)), n_(nvars) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_symbol(char c) const { return peek().kind == Tok::Symbol && peek().text[0] == c; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_statement_end() const { return at_end() || at_symbol(';'); }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  void expect(char c) {
    if (!at_symbol(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }

  void set_nvars(std::size_t n) { n_ = n; }

  WeylElement expression() {
    WeylElement acc = term();
    while (at_symbol('+') || at_symbol('-')) {
      bool minus = next().text[0] == '-';
      WeylElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Integer integer_literal(const char* what) {
    if (peek().kind != Tok::Number) fail(peek(), std::string("expected ") + what);
    return Integer(next().text);
  }

  Rational rational_literal() {
    bool neg = false;
    while (at_symbol('-') || at_symbol('+')) {
      if (next().text[0] == '-') neg = !neg;
    }
    Integer num = integer_literal("a number");
    Integer den = 1;
    if (at_symbol('/')) {
      const Token& slash = next();
      den = integer_literal("a denominator");
      if (den == 0) fail(slash, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  std::vector<Rational> rational_list() {
    std::vector<Rational> out{rational_literal()};
    while (at_symbol(',')) {
      next();
      out.push_back(rational_literal());
    }
    return out;
  }

  std::int64_t small_integer(const char* what) {
    const Token& t = peek();
    Integer v = integer_literal(what);
    if (!v.fits_slong_p()) fail(t, std::string(what) + " is too large");
    return v.get_si();
  }

 private:
  WeylElement term() {
    WeylElement acc = unary();
    while (true) {
      if (at_symbol('*')) {
        next();
        acc = acc * unary();
        continue;
      }
      const Token& t = peek();
      if (t.kind == Tok::Number || t.kind == Tok::Ident || at_symbol('('))
        fail(t, "juxtaposition is not multiplication; use '*'");
      if (at_symbol('/')) fail(t, "'/' is only allowed inside rational literals such as 1/4");
      return acc;
    }
  }

  WeylElement unary() {
    if (at_symbol('-')) {
      next();
      return -unary();
    }
    if (at_symbol('+')) {
      next();
      return unary();
    }
    return power();
  }

  WeylElement power() {
    WeylElement base = atom();
    if (at_symbol('^')) {
      next();
      const Token& t = peek();
      if (t.kind != Tok::Number) fail(t, "exponent must be a nonnegative integer");
      Integer e(next().text);
      if (e > kMaxExponent) fail(t, "exponent is too large");
      base = pow(base, static_cast<unsigned>(e.get_ui()));
      if (at_symbol('^')) fail(peek(), "chained exponents need parentheses");
    }
    return base;
  }

  WeylElement atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      Integer num(next().text);
      Integer den = 1;
      if (at_symbol('/')) {
        next();
        const Token& d = peek();
        if (d.kind != Tok::Number) fail(d, "expected a denominator");
        den = Integer(next().text);
        if (den == 0) fail(d, "zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return WeylElement::constant(n_, r);
    }
    if (t.kind == Tok::Ident) {
      next();
      return variable(t);
    }
    if (at_symbol('(')) {
      next();
      WeylElement e = expression();
      expect(')');
      return e;
    }
    if (at_end()) fail(t, "unexpected end of input");
    fail(t, "unexpected '" + t.text + "'");
  }

  WeylElement variable(const Token& t) {
    bool derivative = t.text.rfind("dx", 0) == 0;
    std::string digits = t.text.substr(derivative ? 2 : 1);
    bool ok = (derivative || t.text[0] == 'x') && !digits.empty() &&
              digits.find_first_not_of("0123456789") == std::string::npos;
    if (!ok) fail(t, "unknown identifier '" + t.text + "'");
    if (digits.size() > 9) fail(t, "variable index out of range");
    std::size_t index = std::stoul(digits);
    if (index == 0 || index > n_) fail(t, "variable index out of range");
    return derivative ? WeylElement::dx(n_, index - 1) : WeylElement::x(n_, index - 1);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

MultiPoly to_polynomial(const WeylElement& e, const Token& at) {
  const std::size_t n = e.nvars();
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : e.terms()) {
    for (std::size_t i = n; i < 2 * n; ++i)
      if (t.exp[i] != 0) throw ParseError(at.line, at.column, "polynomial expected, found a derivative");
    terms.push_back({Exponents(t.exp.begin(), t.exp.begin() + static_cast<std::ptrdiff_t>(n)), t.coef});
  }
  return MultiPoly::from_terms(n, std::move(terms));
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line),
      column_(column) {}

ProblemFile parse_ideal(std::string_view text) {
  Parser p(lex(text), 0);
  ProblemFile out;
  bool have_vars = false;
  while (!p.at_end()) {
    if (p.at_symbol(';')) {
      p.next();
      continue;
    }
    const Token start = p.peek();
    std::string kw = start.kind == Tok::Ident ? start.text : "";
    if (kw == "vars") {
      if (have_vars) p.fail(start, "duplicate vars statement");
      p.next();
      const Token& t = p.peek();
      std::int64_t n = p.small_integer("variable count");
      if (n < 1 || n > 64) p.fail(t, "variable count must be between 1 and 64");
      out.nvars = static_cast<std::size_t>(n);
      p.set_nvars(out.nvars);
      have_vars = true;
    } else if (!have_vars) {
      p.fail(start, "'vars <n>;' must come first");
    } else if (kw == "component" || kw == "avoid") {
      p.next();
      MultiPoly f = to_polynomial(p.expression(), start);
      if (f.is_zero()) p.fail(start, kw + " polynomial must be nonzero");
      (kw == "component" ? out.components : out.avoid).push_back(std::move(f));
    } else if (kw == "point") {
      p.next();
      auto v = p.rational_list();
      if (v.size() != out.nvars) p.fail(start, "point must have one coordinate per variable");
      out.points.push_back(std::move(v));
    } else if (kw == "weight") {
      p.next();
      auto v = p.rational_list();
      if (v.size() != out.nvars) p.fail(start, "weight must have one entry per variable");
      out.weights.push_back(std::move(v));
    } else if (kw == "charts") {
      p.next();
      while (true) {
        const Token& t = p.peek();
        std::int64_t k = p.small_integer("chart index");
        if (k < 1 || static_cast<std::size_t>(k) > out.nvars) p.fail(t, "chart index out of range");
        out.charts.push_back(static_cast<std::size_t>(k));
        if (!p.at_symbol(',')) break;
        p.next();
      }
    } else if (kw == "seed") {
      p.next();
      const Token& t = p.peek();
      Integer v = p.integer_literal("a seed");
      if (!v.fits_ulong_p()) p.fail(t, "seed is too large");
      out.seed = v.get_ui();
    } else if (kw == "height" || kw == "points" || kw == "budget") {
      p.next();
      const Token& t = p.peek();
      std::int64_t v = p.small_integer("a count");
      if (kw == "height") {
        if (v < 1) p.fail(t, "height bound must be positive");
        out.height_bound = v;
      } else if (kw == "points") {
        if (v < 1) p.fail(t, "points per component must be positive");
        out.points_per_component = static_cast<std::size_t>(v);
      } else {
        out.budget_ms = v;
      }
    } else {
      WeylElement g = p.expression();
      if (g.is_zero()) p.fail(start, "generator is zero");
      out.generators.push_back(std::move(g));
    }
    if (!p.at_statement_end()) p.fail(p.peek(), "expected ';'");
  }
  if (!have_vars) throw ParseError(1, 1, "missing 'vars <n>;'");
  if (out.generators.empty()) throw ParseError(1, 1, "no generators");
  return out;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_ideal(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

WeylElement parse_operator(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw UsageError("need at least one variable");
  Parser p(lex(text), nvars);
  WeylElement e = p.expression();
  if (!p.at_end()) p.fail(p.peek(), "unexpected '" + p.peek().text + "'");
  return e;
}

MultiPoly parse_polynomial(std::string_view text, std::size_t nvars) {
  return to_polynomial(parse_operator(text, nvars), Token{});
}

std::string print_problem(const ProblemFile& problem) {
  std::string s = "vars " + std::to_string(problem.nvars) + ";\n";
  for (const auto& g : problem.generators) s += g.to_string() + ";\n";
  for (const auto& c : problem.components) s += "component " + c.to_string() + ";\n";
  for (const auto& a : problem.avoid) s += "avoid " + a.to_string() + ";\n";
  for (const auto& p : problem.points) s += "point " + join(p) + ";\n";
  for (const auto& w : problem.weights) s += "weight " + join(w) + ";\n";
  if (!problem.charts.empty()) {
    s += "charts ";
    for (std::size_t i = 0; i < problem.charts.size(); ++i)
      s += (i ? "," : "") + std::to_string(problem.charts[i]);
    s += ";\n";
  }
  if (problem.seed) s += "seed " + std::to_string(*problem.seed) + ";\n";
  if (problem.height_bound) s += "height " + std::to_string(*problem.height_bound) + ";\n";
  if (problem.points_per_component)
    s += "points " + std::to_string(*problem.points_per_component) + ";\n";
  if (problem.budget_ms) s += "budget " + std::to_string(*problem.budget_ms) + ";\n";
  return s;
}

}  // namespace dreg
