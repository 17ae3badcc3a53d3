#pragma once

#include <memory>
#include <string>
#include <type_traits>

#include "descent/curve.hpp"
#include "descent/expr.hpp"
#include "descent/ratfunc.hpp"

namespace descent {

template <FieldElement K>
using CurvePtr = std::shared_ptr<const WeierstrassCurve<K>>;

/// Element a(x) + b(x)*y of K(E) = K(x)[y]/(Weierstrass relation). The
/// pair (a, b) is unique because y^2 is always eliminated.
template <FieldElement K>
class CurveFunction {
 public:
  using XFunction = RationalFunction<K>;

  CurveFunction(CurvePtr<K> curve, XFunction a, XFunction b)
      : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {}

  static RationalFunctionField<K> x_field(const WeierstrassCurve<K>& curve) {
    return RationalFunctionField<K>(curve.field(), "x");
  }
  static CurveFunction constant(const CurvePtr<K>& curve, const K& c) {
    auto fx = x_field(*curve);
    return CurveFunction(curve, fx.constant(c), fx.zero());
  }
  static CurveFunction from_x(const CurvePtr<K>& curve, XFunction a) {
    auto fx = x_field(*curve);
    return CurveFunction(curve, std::move(a), fx.zero());
  }
  static CurveFunction x(const CurvePtr<K>& curve) { return from_x(curve, x_field(*curve).variable()); }
  static CurveFunction y(const CurvePtr<K>& curve) {
    auto fx = x_field(*curve);
    return CurveFunction(curve, fx.zero(), fx.one());
  }

  const CurvePtr<K>& curve() const { return curve_; }
  const XFunction& a() const { return a_; }
  const XFunction& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_polynomial() const { return a_.is_polynomial() && b_.is_polynomial(); }

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) {
    f.check_same_curve(g);
    return f.a_ == g.a_ && f.b_ == g.b_;
  }

  CurveFunction operator-() const { return CurveFunction(curve_, -a_, -b_); }

  friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) {
    f.check_same_curve(g);
    return CurveFunction(f.curve_, f.a_ + g.a_, f.b_ + g.b_);
  }
  friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) { return f + (-g); }

  /// Product with y^2 replaced by x^3 + a2x^2 + a4x + a6 - a1xy - a3y.
  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
    f.check_same_curve(g);
    if (f.b_.is_zero() && g.b_.is_zero()) return CurveFunction(f.curve_, f.a_ * g.a_, f.b_);
    if (f.b_.is_zero()) return CurveFunction(f.curve_, f.a_ * g.a_, f.a_ * g.b_);
    if (g.b_.is_zero()) return CurveFunction(f.curve_, f.a_ * g.a_, f.b_ * g.a_);
    XFunction bb = f.b_ * g.b_;
    XFunction a = f.a_ * g.a_ + bb * f.cubic();
    XFunction b = f.a_ * g.b_ + g.a_ * f.b_ - bb * f.linear_y_term();
    return CurveFunction(f.curve_, std::move(a), std::move(b));
  }

  CurveFunction scaled(const K& c) const {
    auto cx = x_field(*curve_).constant(c);
    return CurveFunction(curve_, a_ * cx, b_ * cx);
  }

  /// Divide by a function of x alone.
  CurveFunction divided_by(const XFunction& d) const { return CurveFunction(curve_, a_ / d, b_ / d); }

  /// Image under the involution y -> -y - a1x - a3.
  CurveFunction conjugate() const { return CurveFunction(curve_, a_ - b_ * linear_y_term(), -b_); }

  /// f * conjugate(f), an element of K(x).
  XFunction norm_to_base() const {
    CurveFunction n = *this * conjugate();
    if (!n.b_.is_zero()) fail(ErrorCode::InvalidArgument, "norm has a y-component");
    return n.a_;
  }

  CurveFunction inverse() const {
    XFunction n = norm_to_base();
    if (n.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero function");
    return conjugate().divided_by(n);
  }

  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) { return f * g.inverse(); }

  /// a(x_P) + b(x_P) y_P; PoleAtPoint when a or b has a pole at x_P.
  K evaluate_at(const CurvePoint<K>& p) const {
    if (p.is_infinity()) fail(ErrorCode::PoleAtPoint, "evaluation at the point at infinity is not supported");
    return a_.evaluate(p.x()) + b_.evaluate(p.x()) * p.y();
  }

  /// "a(x)+(b(x))*y" in the expression grammar.
  std::string to_string() const {
    std::string a = descent::to_string(a_);
    if (b_.is_zero()) return a;
    std::string b = descent::to_string(b_);
    if (b == "1") {
      b = "y";
    } else if (b == "-1") {
      b = "-y";
    } else {
      b = (detail::needs_parens(b) ? "(" + b + ")" : b) + "*y";
    }
    if (a_.is_zero()) return b;
    return b[0] == '-' ? a + b : a + "+" + b;
  }

 private:
  void check_same_curve(const CurveFunction& g) const {
    if (curve_ != g.curve_ && !(*curve_ == *g.curve_)) fail(ErrorCode::CurveMismatch, "functions on different curves");
  }

  XFunction cubic() const {
    const auto& c = *curve_;
    auto fx = x_field(c);
    Polynomial<K> p(c.field(), {c.a6(), c.a4(), c.a2(), c.field().one()});
    return XFunction(fx, p);
  }

  XFunction linear_y_term() const {
    const auto& c = *curve_;
    return XFunction(x_field(c), Polynomial<K>(c.field(), {c.a3(), c.a1()}));
  }

  CurvePtr<K> curve_;
  XFunction a_;
  XFunction b_;
};

/// x - x_P: divisor (P) + (-P) - 2(O).
template <FieldElement K>
CurveFunction<K> vertical_at(const CurvePtr<K>& curve, const CurvePoint<K>& p) {
  if (p.is_infinity()) fail(ErrorCode::InvalidArgument, "vertical line at O");
  auto fx = CurveFunction<K>::x_field(*curve);
  return CurveFunction<K>::from_x(curve, RationalFunction<K>(fx, Polynomial<K>::linear(p.x())));
}

/// y - y_P - m(x - x_P) through P and Q (tangent when P = Q): divisor
/// (P) + (Q) + (-(P+Q)) - 3(O). VerticalSlope when Q = -P.
template <FieldElement K>
CurveFunction<K> line_through(const CurvePtr<K>& curve, const CurvePoint<K>& p, const CurvePoint<K>& q) {
  if (p.is_infinity() || q.is_infinity()) fail(ErrorCode::InvalidArgument, "line through O");
  auto m = curve->slope(p, q);
  if (!m) fail(ErrorCode::VerticalSlope, "chord or tangent is vertical");
  auto fx = CurveFunction<K>::x_field(*curve);
  const auto k = curve->field();
  // y - (y_P - m x_P) - m x
  Polynomial<K> a(k, {-(p.y() - *m * p.x()), -*m});
  return CurveFunction<K>(curve, RationalFunction<K>(fx, a), fx.one());
}

// ---------------------------------------------------------------------------

/// Parser domain for curve functions: x, y, integers, and (when K is a
/// rational function field) its variable.
template <FieldElement K>
struct CurveFunctionDomain {
  using Value = CurveFunction<K>;
  CurvePtr<K> curve;

  Value integer(const Integer& n) const { return Value::constant(curve, curve->field().from_integer(n)); }
  Value variable(std::string_view name) const {
    if (name == "x") return Value::x(curve);
    if (name == "y") return Value::y(curve);
    if constexpr (requires { curve->field().variable(); }) {
      if (name == curve->field().variable_name()) return Value::constant(curve, curve->field().variable());
    }
    fail(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, unsigned e) const {
    Value acc = Value::constant(curve, curve->field().one());
    for (unsigned i = 0; i < e; ++i) acc = acc * a;
    return acc;
  }
};

template <FieldElement K>
CurveFunction<K> parse_curve_function(std::string_view text, const CurvePtr<K>& curve) {
  CurveFunctionDomain<K> domain{curve};
  return ExpressionParser<CurveFunctionDomain<K>>(text, domain).parse();
}

}  // namespace descent
