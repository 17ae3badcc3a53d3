#pragma once

#include <optional>
#include <string>
#include <utility>

#include "descent/errors.hpp"
#include "descent/field.hpp"

namespace descent {

/// Point of a Weierstrass curve: the point at infinity O or an affine (x, y).
template <FieldElement K>
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(K x, K y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return !xy_.has_value(); }
  const K& x() const { return xy_->first; }
  const K& y() const { return xy_->second; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.xy_ == b.xy_; }

 private:
  CurvePoint() = default;
  CurvePoint(K x, K y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  std::optional<std::pair<K, K>> xy_;
};

template <FieldElement K>
struct CurveInvariants {
  K b2, b4, b6, b8, c4, c6, discriminant;
  std::optional<K> j;  // absent when the discriminant vanishes
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over K.
template <FieldElement K>
class WeierstrassCurve {
 public:
  /// Checked constructor: SingularCurve when the discriminant vanishes.
  WeierstrassCurve(K a1, K a2, K a3, K a4, K a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    if (invariants().discriminant.is_zero()) fail(ErrorCode::SingularCurve, "discriminant vanishes");
  }

  /// Unchecked construction, for discriminant diagnostics.
  static WeierstrassCurve raw(K a1, K a2, K a3, K a4, K a6) {
    return WeierstrassCurve(RawTag{}, std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6));
  }

  const K& a1() const { return a1_; }
  const K& a2() const { return a2_; }
  const K& a3() const { return a3_; }
  const K& a4() const { return a4_; }
  const K& a6() const { return a6_; }
  typename K::Field field() const { return a1_.field(); }

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

  CurveInvariants<K> invariants() const {
    const auto k = field();
    auto n = [&](long v) { return k.from_integer(Integer(v)); };
    K b2 = a1_ * a1_ + n(4) * a2_;
    K b4 = n(2) * a4_ + a1_ * a3_;
    K b6 = a3_ * a3_ + n(4) * a6_;
    K b8 = a1_ * a1_ * a6_ + n(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    K c4 = b2 * b2 - n(24) * b4;
    K c6 = -(b2 * b2 * b2) + n(36) * b2 * b4 - n(216) * b6;
    K disc = -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
    std::optional<K> j;
    if (!disc.is_zero()) j = c4 * c4 * c4 / disc;
    return {b2, b4, b6, b8, c4, c6, disc, j};
  }

  K discriminant() const { return invariants().discriminant; }

  K j_invariant() const {
    auto inv = invariants();
    if (!inv.j) fail(ErrorCode::JUndefined, "singular curve has no j-invariant");
    return *inv.j;
  }

  bool contains(const CurvePoint<K>& p) const {
    if (p.is_infinity()) return true;
    const K& x = p.x();
    const K& y = p.y();
    K lhs = y * y + a1_ * x * y + a3_ * y;
    K rhs = ((x + a2_) * x + a4_) * x + a6_;
    return lhs == rhs;
  }

  void require_on_curve(const CurvePoint<K>& p) const {
    if (!contains(p)) fail(ErrorCode::PointNotOnCurve, "point does not satisfy the curve equation");
  }

  CurvePoint<K> neg(const CurvePoint<K>& p) const {
    if (p.is_infinity()) return p;
    return CurvePoint<K>::affine(p.x(), -p.y() - a1_ * p.x() - a3_);
  }

  /// Slope of the chord/tangent through p and q, or nullopt when that line
  /// is vertical (q = -p).
  std::optional<K> slope(const CurvePoint<K>& p, const CurvePoint<K>& q) const {
    if (p.x() == q.x()) {
      K denom = p.y() + q.y() + a1_ * q.x() + a3_;
      if (denom.is_zero()) return std::nullopt;
      const auto k = field();
      K num = k.from_integer(3) * p.x() * p.x() + k.from_integer(2) * a2_ * p.x() + a4_ - a1_ * p.y();
      return num / (k.from_integer(2) * p.y() + a1_ * p.x() + a3_);
    }
    return (q.y() - p.y()) / (q.x() - p.x());
  }

  CurvePoint<K> add(const CurvePoint<K>& p, const CurvePoint<K>& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    auto m = slope(p, q);
    if (!m) return CurvePoint<K>::infinity();
    K x3 = *m * *m + a1_ * *m - a2_ - p.x() - q.x();
    K y3 = -(*m + a1_) * x3 - (p.y() - *m * p.x()) - a3_;
    auto r = CurvePoint<K>::affine(std::move(x3), std::move(y3));
#ifndef NDEBUG
    require_on_curve(r);
#endif
    return r;
  }

  CurvePoint<K> sub(const CurvePoint<K>& p, const CurvePoint<K>& q) const { return add(p, neg(q)); }

  /// n*p by double-and-add; negative n uses -p.
  CurvePoint<K> scalar_mul(long n, const CurvePoint<K>& p) const {
    if (n < 0) return scalar_mul(-n, neg(p));
    CurvePoint<K> acc = CurvePoint<K>::infinity(), base = p;
    while (n) {
      if (n & 1) acc = add(acc, base);
      n >>= 1;
      if (n) base = add(base, base);
    }
    return acc;
  }

  /// Least n <= bound with nP = O.
  std::optional<long> order_of_point(const CurvePoint<K>& p, long bound) const {
    require_on_curve(p);
    CurvePoint<K> acc = p;
    for (long n = 1; n <= bound; ++n) {
      if (acc.is_infinity()) return n;
      acc = add(acc, p);
    }
    return std::nullopt;
  }

 private:
  struct RawTag {};
  WeierstrassCurve(RawTag, K a1, K a2, K a3, K a4, K a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {}

  K a1_, a2_, a3_, a4_, a6_;
};

/// y^2 + (1-c)xy - by = x^3 - bx^2, with the torsion point at (0, 0).
template <FieldElement K>
WeierstrassCurve<K> tate_normal(const K& b, const K& c) {
  const auto k = b.field();
  return WeierstrassCurve<K>(k.one() - c, -b, -b, k.zero(), k.zero());
}

}  // namespace descent
