#pragma once

#include <random>
#include <string>
#include <vector>

#include "descent/families.hpp"

namespace testing_support {

using namespace descent;
using QF = RationalFunction<Rational>;

inline RationalFunctionField<Rational> qla() { return RationalFunctionField<Rational>(RationalField{}, "la"); }
inline RationalFunctionField<Fp> fla(std::uint64_t p) { return RationalFunctionField<Fp>(PrimeField(p), "la"); }

inline QF q(const char* s) { return parse_ratfunc(s, qla()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 20, bool nonzero = false) {
  for (;;) {
    Rational r(Integer(uniform(-bound, bound)), Integer(uniform(1, bound)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

inline Fp random_fp(const PrimeField& k, bool nonzero = false) {
  for (;;) {
    Fp a(static_cast<std::uint64_t>(uniform(0, static_cast<long>(k.modulus()) - 1)), k.modulus());
    if (!nonzero || !a.is_zero()) return a;
  }
}

inline Rational random_element(const RationalField&, bool nonzero = false) { return random_rational(9, nonzero); }
inline Fp random_element(const PrimeField& k, bool nonzero = false) { return random_fp(k, nonzero); }

/// Polynomial of degree <= 1 in la.
template <FieldElement F>
RationalFunction<F> random_element(const RationalFunctionField<F>& k, bool nonzero = false) {
  for (;;) {
    auto r = k.constant(random_element(k.base())) * k.variable() + k.constant(random_element(k.base()));
    if (!nonzero || !r.is_zero()) return r;
  }
}

template <FieldElement F>
Polynomial<F> random_polynomial(const typename F::Field& k, int degree) {
  std::vector<F> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(k));
  c.back() = random_element(k, true);
  return Polynomial<F>(k, c);
}

/// c * prod f_i^{m_i} with random low-degree f_i; total degree <= max_degree.
template <FieldElement F>
Polynomial<F> random_structured_polynomial(const typename F::Field& k, int max_degree, unsigned max_mult) {
  Polynomial<F> acc = Polynomial<F>::constant(random_element(k, true));
  int budget = max_degree;
  const int pieces = static_cast<int>(uniform(0, 4));
  for (int i = 0; i < pieces && budget > 0; ++i) {
    int d = static_cast<int>(uniform(1, std::min(3, budget)));
    unsigned m = static_cast<unsigned>(uniform(1, max_mult));
    while (m > 1 && d * static_cast<int>(m) > budget) --m;
    if (d * static_cast<int>(m) > budget) break;
    acc *= random_polynomial<F>(k, d).pow(m);
    budget -= d * static_cast<int>(m);
  }
  return acc;
}

template <FieldElement F>
RationalFunction<F> random_ratfunc(const RationalFunctionField<F>& k, int degree = 3) {
  auto num = random_structured_polynomial<F>(k.base(), degree, 3);
  auto den = random_structured_polynomial<F>(k.base(), degree, 3);
  return RationalFunction<F>(k, num) / RationalFunction<F>(k, den);
}

template <FieldElement F>
bool is_squarefree(const Polynomial<F>& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace testing_support
