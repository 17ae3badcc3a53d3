#pragma once

// Text form of polynomials and rational functions.
//
//   ratexpr := expr ("/" expr)*
//   expr    := ["+"|"-"] term (("+"|"-") term)*
//   term    := factor ("*" factor)*
//   factor  := atom ("^" uint)?
//   atom    := name | uint | "(" ratexpr ")"
//
// Whitespace is ignored. Emission is expanded, descending powers, integer
// coefficients over Q (denominators cleared) and residues over F_p.

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>

#include "descent/errors.hpp"
#include "descent/prime_field.hpp"
#include "descent/ratfunc.hpp"

namespace descent {

// ---------------------------------------------------------------------------
// Emission

inline std::string to_string(const Rational& q) { return q.to_string(); }
inline std::string to_string(const Fp& a) { return a.to_string(); }

template <FieldElement F>
std::string to_string(const RationalFunction<F>& r);

namespace detail {

/// True when `s` must be parenthesized to act as a factor.
inline bool needs_parens(std::string_view s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
  }
  return false;
}

inline bool is_token(std::string_view s) {
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return !s.empty();
}

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rational>;

}  // namespace detail

/// Expanded form of a polynomial in `var`.
template <FieldElement F>
std::string format_polynomial(const Polynomial<F>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_zero()) continue;
    std::string c = to_string(coeffs[k]);
    std::string term;
    std::string power = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    if (k == 0) {
      term = detail::needs_parens(c) ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = power;
    } else if (c == "-1") {
      term = "-" + power;
    } else {
      term = (detail::needs_parens(c) ? "(" + c + ")" : c) + "*" + power;
    }
    if (!out.empty()) {
      if (term[0] == '-') {
        out += "-";
        term.erase(0, 1);
      } else {
        out += "+";
      }
    }
    out += term;
  }
  return out;
}

template <FieldElement F>
std::string to_string(const RationalFunction<F>& r) {
  const char* var = r.field().variable_name();
  Polynomial<F> num = r.num(), den = r.den();
  if constexpr (detail::is_rational_v<F>) {
    Integer l = 1;
    for (const auto* p : {&num, &den}) {
      for (const auto& c : p->coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    Integer g = 0;
    for (const auto* p : {&num, &den}) {
      for (const auto& c : p->coefficients()) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    }
    Rational scale(l, g);
    num = num.scaled(scale);
    den = den.scaled(scale);
  }
  std::string n = format_polynomial(num, var);
  std::string d = format_polynomial(den, var);
  if (d == "1") return n;
  if (num.term_count() > 1) n = "(" + n + ")";
  if (!detail::is_token(d)) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Parsing

/// Recursive-descent parser over a semantic domain. The domain supplies
/// `Value`, `integer(Integer)`, `variable(name)` and the arithmetic.
template <class Domain>
class ExpressionParser {
 public:
  using Value = typename Domain::Value;

  ExpressionParser(std::string_view text, const Domain& domain) : text_(text), domain_(domain) {}

  Value parse() {
    Value v = ratexpr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value ratexpr() {
    Value v = expr();
    while (accept('/')) v = domain_.div(v, expr());
    return v;
  }

  Value expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Value v = term();
    if (negate) v = domain_.neg(v);
    for (;;) {
      if (accept('+')) {
        v = domain_.add(v, term());
      } else if (accept('-')) {
        v = domain_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (accept('*')) v = domain_.mul(v, factor());
    return v;
  }

  Value factor() {
    Value v = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      v = domain_.pow(v, static_cast<unsigned>(e));
    }
    return v;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = ratexpr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return domain_.integer(Integer(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return domain_.variable(text_.substr(start, pos_ - start));
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Domain& domain_;
  std::size_t pos_ = 0;
};

/// Elements of a field used directly as values (Q, F_p).
template <FieldElement F>
struct ScalarDomain {
  using Value = F;
  typename F::Field field;

  Value integer(const Integer& n) const { return field.from_integer(n); }
  Value variable(std::string_view name) const {
    fail(ErrorCode::ParseError, "unexpected variable '" + std::string(name) + "' in a constant");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, unsigned e) const { return power(a, static_cast<long>(e)); }
};

/// Rational functions in the field's variable (default "la").
template <FieldElement F>
struct RationalFunctionDomain {
  using Value = RationalFunction<F>;
  RationalFunctionField<F> field;

  Value integer(const Integer& n) const { return field.from_integer(n); }
  Value variable(std::string_view name) const {
    if (name != field.variable_name()) fail(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
    return field.variable();
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, unsigned e) const { return power(a, static_cast<long>(e)); }
};

template <FieldElement F>
F parse_scalar(std::string_view text, const typename F::Field& field) {
  ScalarDomain<F> domain{field};
  return ExpressionParser<ScalarDomain<F>>(text, domain).parse();
}

template <FieldElement F>
RationalFunction<F> parse_ratfunc(std::string_view text, const RationalFunctionField<F>& field) {
  RationalFunctionDomain<F> domain{field};
  return ExpressionParser<RationalFunctionDomain<F>>(text, domain).parse();
}

template <FieldElement F>
Polynomial<F> parse_polynomial(std::string_view text, const RationalFunctionField<F>& field) {
  auto r = parse_ratfunc(text, field);
  if (!r.is_polynomial()) fail(ErrorCode::ParseError, "expected a polynomial: '" + std::string(text) + "'");
  return r.num();
}

template <FieldElement F>
std::string to_string(const Polynomial<F>& p, const char* var = "la") {
  return to_string(RationalFunction<F>(RationalFunctionField<F>(p.field(), var), p));
}

}  // namespace descent
