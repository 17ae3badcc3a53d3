#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent/errors.hpp"
#include "descent/field.hpp"

namespace descent {

/// Dense univariate polynomial over a field, coefficients ascending by
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <FieldElement F>
class Polynomial {
 public:
  using Field = typename F::Field;
  using Coefficient = F;

  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<F> coefficients)
      : field_(std::move(field)), c_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(const F& c) { return Polynomial(c.field(), {c}); }
  static Polynomial variable(const Field& field) { return Polynomial(field, {field.zero(), field.one()}); }
  static Polynomial monomial(const F& c, std::size_t degree) {
    std::vector<F> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Polynomial(c.field(), std::move(v));
  }
  /// x - root
  static Polynomial linear(const F& root) { return Polynomial(root.field(), {-root, root.field().one()}); }

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  std::span<const F> coefficients() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  F leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const F& v) { return !v.is_zero(); }));
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const Polynomial& longer = a.c_.size() >= b.c_.size() ? a : b;
    const Polynomial& shorter = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<F> v = longer.c_;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i) v[i] += shorter.c_[i];
    return Polynomial(longer.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(v));
  }

  Polynomial scaled(const F& s) const {
    if (s.is_zero()) return Polynomial(field_);
    std::vector<F> v = c_;
    for (auto& x : v) x *= s;
    return Polynomial(field_, std::move(v));
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(a.field_), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(a.c_.size() - b.c_.size() + 1, a.field_.zero());
    const F inv_lead = a.field_.one() / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      F t = r[k + db];
      if (t.is_zero()) continue;
      t *= inv_lead;
      q[k] = t;
      for (std::size_t j = 0; j <= db; ++j) {
        if (!b.c_[j].is_zero()) r[k + j] -= t * b.c_[j];
      }
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
    return {Polynomial(a.field_, std::move(q)), Polynomial(a.field_, std::move(r))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Quotient a/b, failing unless b divides a.
  static Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<F> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_.from_integer(Integer(static_cast<unsigned long>(i))));
    return Polynomial(field_, std::move(v));
  }

  F evaluate(const F& x) const {
    F acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const {
    if (is_zero() || leading() == field_.one()) return *this;
    return scaled(field_.one() / leading());
  }

  Polynomial pow(unsigned e) const {
    Polynomial acc = constant(field_.one()), base = *this;
    while (e) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  /// Replace every coefficient through `map` (e.g. reduction mod p).
  template <class G, class Map>
  Polynomial<G> map_coefficients(const typename G::Field& target, Map&& map) const {
    std::vector<G> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(map(x));
    return Polynomial<G>(target, std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<F> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <FieldElement F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = Polynomial<F>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b).
template <FieldElement F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> extended_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  using P = Polynomial<F>;
  const auto& k = a.field();
  P r0 = a, r1 = b, s0 = P::constant(k.one()), s1(k), t0(k), t1 = P::constant(k.one());
  while (!r1.is_zero()) {
    auto [q, r] = P::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = k.one() / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace descent
