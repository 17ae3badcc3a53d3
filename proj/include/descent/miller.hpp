#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "descent/function_field.hpp"
#include "descent/kummer.hpp"

namespace descent {

/// Coefficient field under K: F for K = F(la), K itself for Q and F_p.
template <class K>
struct scalar_of {
  using type = K;
};
template <FieldElement F>
struct scalar_of<RationalFunction<F>> {
  using type = F;
};
template <class K>
using scalar_of_t = typename scalar_of<K>::type;

template <FieldElement K>
using ClassOf = PowerClass<scalar_of_t<K>>;

/// Exponent choice (a, b, A, B) for the normalization unit
/// u = f(aP)^-A f(bP)^-B.
struct NormalizationExponents {
  long a, b, A, B;
};

inline NormalizationExponents normalization_exponents(unsigned n) {
  if (n < 4) fail(ErrorCode::UnsupportedN, "normalization needs N >= 4");
  NormalizationExponents e = n == 4 ? NormalizationExponents{3, 2, 2, -1} : NormalizationExponents{2, 4, 2, -1};
  const long m = n;
  auto mod = [m](long v) { return ((v % m) + m) % m; };
  if (mod(e.A + e.B) != 1 || mod(e.a * e.A + e.b * e.B) != 0 || mod(e.a) <= 1 || mod(e.b) <= 1) {
    fail(ErrorCode::InvalidArgument, "normalization exponents violate their congruences");
  }
  return e;
}

namespace detail {

template <FieldElement K>
void check_miller_input(const WeierstrassCurve<K>& curve, const CurvePoint<K>& p, unsigned n) {
  if (n < 4) fail(ErrorCode::UnsupportedN, "Miller functions are built for N >= 4");
  const Integer ch = curve.field().characteristic();
  if (ch != 0 && Integer(n) % ch == 0) fail(ErrorCode::BadCharacteristic, "characteristic divides N");
  if (p.is_infinity()) fail(ErrorCode::NotTorsion, "P = O");
  curve.require_on_curve(p);
  if (!curve.scalar_mul(n, p).is_infinity()) fail(ErrorCode::NotTorsion, "N*P != O");
}

/// Line through t and q divided by the vertical at t+q, together with t+q.
/// A vertical chord/tangent contributes the vertical itself and reaches O.
template <FieldElement K>
std::pair<CurveFunction<K>, CurvePoint<K>> miller_step(const CurvePtr<K>& curve, const CurvePoint<K>& t,
                                                       const CurvePoint<K>& q) {
  if (!curve->slope(t, q)) return {vertical_at(curve, t), CurvePoint<K>::infinity()};
  CurvePoint<K> r = curve->add(t, q);
  CurveFunction<K> line = line_through(curve, t, q);
  return {line.divided_by(vertical_at(curve, r).a()), r};
}

}  // namespace detail

/// f with div(f) = N(P) - N(O), built left to right with
/// div(f_m) = m(P) - (mP) - (m-1)(O). No rescaling is applied.
template <FieldElement K>
CurveFunction<K> miller_function(const CurvePtr<K>& curve, const CurvePoint<K>& p, unsigned n) {
  detail::check_miller_input(*curve, p, n);
  CurveFunction<K> f = CurveFunction<K>::constant(curve, curve->field().one());
  CurvePoint<K> t = p;
  int top = 31;
  while (!((n >> top) & 1u)) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    auto [dbl, t2] = detail::miller_step(curve, t, t);
    f = f * f * dbl;
    t = t2;
    if ((n >> bit) & 1u) {
      auto [add, t3] = detail::miller_step(curve, t, p);
      f = f * add;
      t = t3;
    }
  }
  if (!t.is_infinity()) fail(ErrorCode::NotTorsion, "Miller loop did not reach O");
  if (!f.is_polynomial()) fail(ErrorCode::InvalidArgument, "Miller function has a finite pole");
  return f;
}

/// The constant c with norm(f) = c (x - x_P)^N, or nullopt when the norm
/// does not have that shape.
template <FieldElement K>
std::optional<K> divisor_certificate(const CurveFunction<K>& f, const CurvePoint<K>& p, unsigned n) {
  auto norm = f.norm_to_base();
  if (!norm.is_polynomial() || norm.num().degree() != static_cast<int>(n)) return std::nullopt;
  K c = norm.num().leading();
  Polynomial<K> expected = Polynomial<K>::linear(p.x()).pow(n).scaled(c);
  if (!(norm.num() == expected)) return std::nullopt;
  return c;
}

/// Degree bounds forced by a pole of order N at O only.
template <FieldElement K>
bool satisfies_degree_bounds(const CurveFunction<K>& f, unsigned n) {
  if (!f.is_polynomial()) return false;
  const int max_a = static_cast<int>(n / 2);
  const int max_b = n >= 3 ? static_cast<int>((n - 3) / 2) : -1;
  return f.a().num().degree() <= max_a && f.b().num().degree() <= max_b;
}

/// u = f(aP)^-A f(bP)^-B, the value rescaling f so that n -> u f(nP) is a
/// homomorphism on {2..N-1}.
template <FieldElement K>
K normalization_unit_value(const WeierstrassCurve<K>& curve, const CurvePoint<K>& p, unsigned n,
                           const CurveFunction<K>& f) {
  auto e = normalization_exponents(n);
  K fa = f.evaluate_at(curve.scalar_mul(e.a, p));
  K fb = f.evaluate_at(curve.scalar_mul(e.b, p));
  if (fa.is_zero() || fb.is_zero()) fail(ErrorCode::PoleAtPoint, "f vanishes at a multiple of P");
  return power(fa, -e.A) * power(fb, -e.B);
}

template <FieldElement K>
ClassOf<K> normalization_unit(const WeierstrassCurve<K>& curve, const CurvePoint<K>& p, unsigned n,
                              const CurveFunction<K>& f) {
  return class_of(normalization_unit_value(curve, p, n, f), n);
}

/// delta(nP) for n = 1..N-1 over a field K, together with the certificates
/// that produced it.
template <FieldElement K>
struct DescentTable {
  unsigned n = 0;
  std::string provenance;
  std::optional<ClassOf<K>> unit;            // absent for the literature tables N = 2, 3
  std::map<unsigned, ClassOf<K>> entries;    // n -> delta(nP)
  std::optional<CurveFunction<K>> function;  // raw Miller function
  std::optional<K> norm_constant;
  std::map<unsigned, CurvePoint<K>> points;  // nP
};

/// Table from a given function f with div(f) = N(P) - N(O) (any scaling).
template <FieldElement K>
DescentTable<K> descent_table_from(const CurvePtr<K>& curve, const CurvePoint<K>& p, unsigned n,
                                   const CurveFunction<K>& f) {
  DescentTable<K> table;
  table.n = n;
  table.function = f;
  table.norm_constant = divisor_certificate(f, p, n);
  if (!table.norm_constant) fail(ErrorCode::InvalidArgument, "function fails the divisor certificate");
  CurvePoint<K> q = p;
  table.points.emplace(1, p);
  for (unsigned m = 2; m < n; ++m) {
    q = curve->add(q, p);
    table.points.emplace(m, q);
  }
  K u = normalization_unit_value(*curve, p, n, f);
  table.unit = class_of(u, n);
  for (unsigned m = 2; m < n; ++m) {
    K value = f.evaluate_at(table.points.at(m));
    if (value.is_zero()) fail(ErrorCode::PoleAtPoint, "f vanishes at " + std::to_string(m) + "P");
    table.entries.emplace(m, class_of(u * value, n));
  }
  // P = 2P + (N-1)P
  table.entries.emplace(1, mul_classes(table.entries.at(2), table.entries.at(n - 1)));
  return table;
}

template <FieldElement K>
DescentTable<K> descent_table(const CurvePtr<K>& curve, const CurvePoint<K>& p, unsigned n) {
  return descent_table_from(curve, p, n, miller_function(curve, p, n));
}

/// Single entry delta(nP), n in 1..N-1.
template <FieldElement K>
ClassOf<K> delta_value(const CurvePtr<K>& curve, const CurvePoint<K>& p, unsigned n, unsigned index) {
  if (index < 1 || index >= n) fail(ErrorCode::InvalidArgument, "delta index outside 1..N-1");
  return descent_table(curve, p, n).entries.at(index);
}

}  // namespace descent
