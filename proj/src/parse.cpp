#include "frosl/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "frosl/errors.hpp"

namespace frosl {

namespace {

struct Cursor {
  std::string s;
  size_t pos = 0;

  explicit Cursor(const std::string& text) {
    s.reserve(text.size());
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    const size_t len = std::char_traits<char>::length(w);
    if (s.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
};

double parse_number(Cursor& c) {
  const char* begin = c.s.c_str() + c.pos;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) throw ParseError("expected a number in '" + c.s + "'");
  c.pos += static_cast<size_t>(end - begin);
  return v;
}

double parse_const_factor(Cursor& c) {
  if (c.eat_word("pi")) return M_PI;
  if (c.eat_word("sqrt")) {
    if (!c.eat('(')) throw ParseError("sqrt: expected '('");
    const double v = parse_number(c);
    if (!c.eat(')')) throw ParseError("sqrt: expected ')'");
    if (v < 0.0) throw ParseError("sqrt of a negative value");
    return std::sqrt(v);
  }
  return parse_number(c);
}

bool at_const_symbol(const Cursor& c) {
  return c.s.compare(c.pos, 2, "pi") == 0 || c.s.compare(c.pos, 5, "sqrt(") == 0;
}

double parse_const_product(Cursor& c) {
  double v = parse_const_factor(c);
  for (;;) {
    if (c.peek() == '*' && c.pos + 1 < c.s.size() &&
        (std::isdigit(static_cast<unsigned char>(c.s[c.pos + 1])) ||
         c.s[c.pos + 1] == '.' ||
         (c.s.compare(c.pos + 1, 2, "pi") == 0) ||
         (c.s.compare(c.pos + 1, 5, "sqrt(") == 0))) {
      c.eat('*');
      v *= parse_const_factor(c);
    } else if (at_const_symbol(c)) {
      v *= parse_const_factor(c);  // juxtaposition: 2pi, 3sqrt(2)
    } else {
      break;
    }
  }
  if (c.eat('/')) v /= parse_const_product(c);
  return v;
}

}  // namespace

double parse_real_expr(const std::string& text) {
  Cursor c(text);
  double sign = 1.0;
  if (c.eat('-')) sign = -1.0;
  const double v = sign * parse_const_product(c);
  if (!c.done())
    throw ParseError("trailing characters in expression '" + text + "'");
  return v;
}

FrozenArguments parse_frozen(const std::string& text) {
  std::vector<double> points;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!piece.empty()) points.push_back(parse_real_expr(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (points.empty()) throw ParseError("frozen list is empty");
  return FrozenArguments(std::move(points));
}

namespace {

struct Term {
  double coeff = 1.0;
  enum Kind { kConst, kPoly, kCos, kSin } kind = kConst;
  int degree_or_mode = 0;
};

void parse_trig_arg(Cursor& c, Term& term) {
  if (!c.eat('(')) throw ParseError("cos/sin: expected '('");
  int mode = 1;
  if (c.peek() != 't') {
    mode = int(parse_number(c));
    c.eat('*');
  }
  if (!c.eat('t')) throw ParseError("cos/sin argument must be (k t)");
  if (!c.eat(')')) throw ParseError("cos/sin: expected ')'");
  if (mode < 1) throw ParseError("cos/sin mode must be >= 1");
  term.degree_or_mode = mode;
}

Term parse_term(const std::string& body) {
  Term term;
  Cursor c(body);
  // optional leading constant coefficient: digits, '.', pi, sqrt(
  const char p = c.peek();
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(p)) || p == '.' ||
      at_const_symbol(c)) {
    term.coeff = parse_const_product(c);
    have_coeff = true;
    c.eat('*');
  }
  if (c.done()) {
    if (!have_coeff) throw ParseError("empty term");
    term.kind = Term::kConst;
    return term;
  }
  if (c.eat_word("cos")) {
    term.kind = Term::kCos;
    parse_trig_arg(c, term);
  } else if (c.eat_word("sin")) {
    term.kind = Term::kSin;
    parse_trig_arg(c, term);
  } else if (c.eat('t')) {
    term.kind = Term::kPoly;
    term.degree_or_mode = 1;
    if (c.eat('^')) term.degree_or_mode = int(parse_number(c));
    if (term.degree_or_mode < 1) throw ParseError("t^k needs k >= 1");
  } else {
    throw ParseError("unrecognized term '" + body + "'");
  }
  if (!c.done()) throw ParseError("trailing characters in term '" + body + "'");
  return term;
}

}  // namespace

Potential parse_potential_expr(const std::string& text, int grid_points) {
  Cursor probe(text);
  if (probe.s == "zero" || probe.s == "0")
    return Potential::zero(grid_points);

  // split on top-level +/-
  std::vector<std::pair<double, std::string>> pieces;  // sign, body
  const std::string& s = probe.s;
  size_t i = 0;
  while (i < s.size()) {
    double sign = 1.0;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1.0;
      ++i;
    }
    size_t j = i;
    int depth = 0;
    while (j < s.size()) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-')) break;
      ++j;
    }
    if (j == i) throw ParseError("empty term in potential '" + text + "'");
    pieces.emplace_back(sign, s.substr(i, j - i));
    i = j;
  }

  std::vector<Term> terms;
  bool any_trig = false, any_poly = false;
  for (auto& [sign, body] : pieces) {
    Term t = parse_term(body);
    t.coeff *= sign;
    if (t.kind == Term::kCos || t.kind == Term::kSin) any_trig = true;
    if (t.kind == Term::kPoly) any_poly = true;
    terms.push_back(t);
  }
  if (any_trig && any_poly)
    throw ParseError("potential mixes polynomial and trigonometric terms");

  if (any_trig) {
    TrigForm form;
    for (const Term& t : terms) {
      if (t.kind == Term::kConst) {
        form.constant += t.coeff;
      } else {
        auto& vec = (t.kind == Term::kCos) ? form.cos_coeff : form.sin_coeff;
        if (int(vec.size()) < t.degree_or_mode)
          vec.resize(size_t(t.degree_or_mode), 0.0);
        vec[size_t(t.degree_or_mode - 1)] += t.coeff;
      }
    }
    return Potential(std::move(form), grid_points);
  }
  PolyForm form;
  for (const Term& t : terms) {
    const int deg = (t.kind == Term::kConst) ? 0 : t.degree_or_mode;
    if (int(form.coeff.size()) <= deg) form.coeff.resize(size_t(deg) + 1, 0.0);
    form.coeff[size_t(deg)] += t.coeff;
  }
  return Potential(std::move(form), grid_points);
}

}  // namespace frosl
