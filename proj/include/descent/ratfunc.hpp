#pragma once

#include <string>
#include <utility>

#include "descent/errors.hpp"
#include "descent/polynomial.hpp"

namespace descent {

template <FieldElement F>
class RationalFunction;

/// F(t) for a coefficient field F. The variable name only matters for
/// printing and parsing; two fields over the same base compare equal.
template <FieldElement F>
class RationalFunctionField {
 public:
  using Base = F;

  explicit RationalFunctionField(typename F::Field base, const char* variable = "la")
      : base_(std::move(base)), variable_(variable) {}

  const typename F::Field& base() const { return base_; }
  const char* variable_name() const { return variable_; }
  Integer characteristic() const { return base_.characteristic(); }

  RationalFunction<F> zero() const;
  RationalFunction<F> one() const;
  RationalFunction<F> from_integer(const Integer& n) const;
  RationalFunction<F> constant(const F& c) const;
  RationalFunction<F> variable() const;

  bool operator==(const RationalFunctionField& other) const { return base_ == other.base_; }

 private:
  typename F::Field base_;
  const char* variable_;
};

/// Reduced fraction num/den with den monic and gcd(num, den) = 1; zero is 0/1.
template <FieldElement F>
class RationalFunction {
 public:
  using Field = RationalFunctionField<F>;
  using Base = F;
  using Poly = Polynomial<F>;

  RationalFunction(Field field, Poly num, Poly den) : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    auto g = gcd(num_, den_);
    if (!g.is_one() && !num_.is_zero()) {
      num_ = Poly::exact_quotient(num_, g);
      den_ = Poly::exact_quotient(den_, g);
    }
    normalize_unit();
  }
  RationalFunction(Field field, Poly p) : field_(std::move(field)), num_(std::move(p)), den_(Poly::constant(num_.field().one())) {}

  const Field& field() const { return field_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value of a constant function (caller checks is_constant()).
  F constant_value() const { return num_.coeff(0); }

  RationalFunction operator-() const { return from_reduced(field_, -num_, den_); }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    RationalFunction r = from_reduced(field_, den_, num_);
    r.normalize_unit();
    return r;
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return a.field_.zero();
    if (a.den_.is_one() && b.den_.is_one()) return from_reduced(a.field_, a.num_ * b.num_, a.den_);
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly an = g1.is_one() ? a.num_ : Poly::exact_quotient(a.num_, g1);
    Poly bd = g1.is_one() ? b.den_ : Poly::exact_quotient(b.den_, g1);
    Poly bn = g2.is_one() ? b.num_ : Poly::exact_quotient(b.num_, g2);
    Poly ad = g2.is_one() ? a.den_ : Poly::exact_quotient(a.den_, g2);
    RationalFunction r = from_reduced(a.field_, an * bn, ad * bd);
    r.normalize_unit();
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return from_reduced(a.field_, a.num_ + b.num_, a.den_);
      return RationalFunction(a.field_, a.num_ + b.num_, a.den_);
    }
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return from_reduced(a.field_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly bq = Poly::exact_quotient(b.den_, g), aq = Poly::exact_quotient(a.den_, g);
    Poly num = a.num_ * bq + b.num_ * aq;
    Poly den = a.den_ * bq;
    Poly h = gcd(num, g);
    if (!h.is_one() && !num.is_zero()) {
      num = Poly::exact_quotient(num, h);
      den = Poly::exact_quotient(den, h);
    }
    if (num.is_zero()) return a.field_.zero();
    return from_reduced(a.field_, std::move(num), std::move(den));
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at t0; PoleAtPoint when the denominator vanishes there.
  F evaluate(const F& t0) const {
    F d = den_.evaluate(t0);
    if (d.is_zero()) fail(ErrorCode::PoleAtPoint, "denominator vanishes at the evaluation point");
    return num_.evaluate(t0) / d;
  }

 private:
  static RationalFunction from_reduced(const Field& field, Poly num, Poly den) {
    RationalFunction r(field, std::move(num));
    r.den_ = std::move(den);
    return r;
  }

  void normalize_unit() {
    if (num_.is_zero()) {
      den_ = Poly::constant(den_.field().one());
      return;
    }
    F lead = den_.leading();
    if (lead == den_.field().one()) return;
    F inv = den_.field().one() / lead;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }

  Field field_;
  Poly num_;
  Poly den_;
};

template <FieldElement F>
RationalFunction<F> RationalFunctionField<F>::zero() const {
  return RationalFunction<F>(*this, Polynomial<F>(base_));
}
template <FieldElement F>
RationalFunction<F> RationalFunctionField<F>::one() const {
  return constant(base_.one());
}
template <FieldElement F>
RationalFunction<F> RationalFunctionField<F>::from_integer(const Integer& n) const {
  return constant(base_.from_integer(n));
}
template <FieldElement F>
RationalFunction<F> RationalFunctionField<F>::constant(const F& c) const {
  return RationalFunction<F>(*this, Polynomial<F>::constant(c));
}
template <FieldElement F>
RationalFunction<F> RationalFunctionField<F>::variable() const {
  return RationalFunction<F>(*this, Polynomial<F>::variable(base_));
}

/// Q(la) and F_p(la): the base fields of the torsion families.
using QFunction = RationalFunction<Rational>;

}  // namespace descent
