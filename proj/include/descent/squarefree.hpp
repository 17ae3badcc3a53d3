#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "descent/errors.hpp"
#include "descent/polynomial.hpp"
#include "descent/prime_field.hpp"

namespace descent {

// ---------------------------------------------------------------------------
// Canonical ordering: degree first, then the non-leading coefficients from
// degree-1 down to the constant term. Rationals compare by absolute value
// with negatives first (so la < la-1 < la+1); residues compare as integers.

inline int compare_coefficient(const Rational& a, const Rational& b) {
  int c = cmp(::abs(a.raw()), ::abs(b.raw()));
  if (c != 0) return c < 0 ? -1 : 1;
  if (a.sign() == b.sign()) return 0;
  return a.sign() < b.sign() ? -1 : 1;
}

inline int compare_coefficient(const Fp& a, const Fp& b) {
  if (a.value() == b.value()) return 0;
  return a.value() < b.value() ? -1 : 1;
}

template <FieldElement F>
bool canonical_less(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k-- > 0;) {
    int c = compare_coefficient(a.coeff(static_cast<std::size_t>(k)), b.coeff(static_cast<std::size_t>(k)));
    if (c != 0) return c < 0;
  }
  return false;
}

// ---------------------------------------------------------------------------

template <FieldElement F>
struct PowerFactor {
  Polynomial<F> factor;
  unsigned multiplicity;
  bool operator==(const PowerFactor&) const = default;
};

/// p = unit * prod factor^multiplicity, factors monic, squarefree and
/// pairwise coprime.
template <FieldElement F>
struct SquarefreeDecomposition {
  F unit;
  std::vector<PowerFactor<F>> factors;
};

template <FieldElement F>
Polynomial<F> expand(const SquarefreeDecomposition<F>& d) {
  Polynomial<F> acc = Polynomial<F>::constant(d.unit);
  for (const auto& f : d.factors) acc *= f.factor.pow(f.multiplicity);
  return acc;
}

/// Yun's algorithm. In characteristic q a multiplicity >= q cannot be
/// separated by derivatives; that is reported as InseparableInput after
/// the product check.
template <FieldElement F>
SquarefreeDecomposition<F> yun_squarefree(const Polynomial<F>& p) {
  using P = Polynomial<F>;
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "squarefree decomposition of zero");
  SquarefreeDecomposition<F> out{p.leading(), {}};
  P f = p.monic();
  if (f.degree() <= 0) return out;
  P df = f.derivative();
  if (df.is_zero()) fail(ErrorCode::InseparableInput, "derivative vanishes identically");
  P a = gcd(f, df);
  P b = P::exact_quotient(f, a);
  P c = P::exact_quotient(df, a);
  P d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    if (i > static_cast<unsigned>(f.degree()) + 1) fail(ErrorCode::InseparableInput, "Yun iteration did not terminate");
    a = gcd(b, d);
    b = P::exact_quotient(b, a);
    c = d.is_zero() ? P(f.field()) : P::exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.push_back({a, i});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.factor, y.factor); });
  if (!(expand(out) == p)) fail(ErrorCode::InseparableInput, "a multiplicity is divisible by the characteristic");
  return out;
}

// ---------------------------------------------------------------------------
// Full factorization over F_p (fallback for inseparable inputs).

namespace detail {

inline Polynomial<Fp> mulmod(const Polynomial<Fp>& a, const Polynomial<Fp>& b, const Polynomial<Fp>& m) {
  return (a * b) % m;
}

inline Polynomial<Fp> powmod(Polynomial<Fp> base, const Integer& e, const Polynomial<Fp>& m) {
  Polynomial<Fp> acc = Polynomial<Fp>::constant(m.field().one());
  base = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, base, m);
  }
  return acc;
}

inline Polynomial<Fp> pth_root(const Polynomial<Fp>& f) {
  const std::uint64_t p = f.field().modulus();
  std::vector<Fp> v;
  for (std::size_t k = 0; k * p <= static_cast<std::size_t>(f.degree()); ++k) v.push_back(f.coeff(k * p));
  return Polynomial<Fp>(f.field(), std::move(v));
}

/// Squarefree, pairwise coprime pieces whose product has the same
/// irreducible support as f (multiplicities discarded).
inline void squarefree_support(const Polynomial<Fp>& f, std::vector<Polynomial<Fp>>& out) {
  using P = Polynomial<Fp>;
  if (f.degree() <= 0) return;
  P c = gcd(f, f.derivative());
  P w = P::exact_quotient(f, c);
  while (w.degree() > 0) {
    P y = gcd(w, c);
    P z = P::exact_quotient(w, y);
    if (z.degree() > 0) out.push_back(z);
    w = y;
    c = P::exact_quotient(c, y);
  }
  if (c.degree() > 0) squarefree_support(pth_root(c), out);
}

inline void equal_degree_split(const Polynomial<Fp>& f, int d, std::mt19937_64& rng, std::vector<Polynomial<Fp>>& out) {
  using P = Polynomial<Fp>;
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& k = f.field();
  const std::uint64_t p = k.modulus();
  for (;;) {
    std::vector<Fp> v;
    for (int i = 0; i < f.degree(); ++i) v.push_back(Fp(rng() % p, p));
    P a(k, std::move(v));
    if (a.degree() <= 0) continue;
    P b(k);
    if (p == 2) {
      P t = a % f;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = mulmod(t, t, f);
        b += t;
      }
    } else {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - P::constant(k.one());
    }
    P g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(P::exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Irreducible factorization over F_p: distinct-degree then equal-degree
/// (Cantor-Zassenhaus) splitting of each squarefree piece.
inline SquarefreeDecomposition<Fp> factor_over_fp(const Polynomial<Fp>& f) {
  using P = Polynomial<Fp>;
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "factorization of zero");
  SquarefreeDecomposition<Fp> out{f.leading(), {}};
  P monic = f.monic();
  std::vector<P> pieces;
  detail::squarefree_support(monic, pieces);
  std::mt19937_64 rng(0x5eedULL);
  std::vector<P> irreducibles;
  const P x = P::variable(f.field());
  for (P g : pieces) {
    P h = x;
    for (int i = 1; g.degree() >= 2 * i; ++i) {
      h = detail::powmod(h, f.field().characteristic(), g);
      P part = gcd(h - x, g);
      if (part.degree() > 0) {
        detail::equal_degree_split(part, i, rng, irreducibles);
        g = P::exact_quotient(g, part);
        h = h % g;
      }
    }
    if (g.degree() > 0) irreducibles.push_back(g);
  }
  for (const auto& q : irreducibles) {
    unsigned m = 0;
    P rest = monic;
    for (;;) {
      auto [quo, rem] = P::divmod(rest, q);
      if (!rem.is_zero()) break;
      rest = quo;
      ++m;
    }
    out.factors.push_back({q, m});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.factor, y.factor); });
  return out;
}

/// Squarefree decomposition that never reports InseparableInput: Yun
/// first, full factorization over F_p when Yun cannot separate.
template <FieldElement F>
SquarefreeDecomposition<F> squarefree_decomposition(const Polynomial<F>& p) {
  if constexpr (std::is_same_v<F, Fp>) {
    try {
      return yun_squarefree(p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InseparableInput) throw;
      return factor_over_fp(p);
    }
  } else {
    return yun_squarefree(p);
  }
}

// ---------------------------------------------------------------------------

/// Pairwise coprime monic squarefree basis; inputs[i] =
/// units[i] * prod basis[j]^exponents[i][j].
template <FieldElement F>
struct GcdFreeBasis {
  std::vector<Polynomial<F>> basis;
  std::vector<std::vector<unsigned>> exponents;
  std::vector<F> units;
};

namespace detail {

template <FieldElement F>
void refine_into(std::vector<Polynomial<F>>& basis, Polynomial<F> a) {
  using P = Polynomial<F>;
  for (std::size_t j = 0; j < basis.size() && a.degree() > 0; ++j) {
    P g = gcd(a, basis[j]);
    if (g.degree() <= 0) continue;
    P rest = P::exact_quotient(basis[j], g);
    basis[j] = g;
    if (rest.degree() > 0) basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(j) + 1, rest.monic());
    a = P::exact_quotient(a, g);
  }
  if (a.degree() > 0) basis.push_back(a.monic());
}

}  // namespace detail

/// Basis elements appear in discovery order (input order, split in place).
template <FieldElement F>
GcdFreeBasis<F> gcd_free_basis(const std::vector<Polynomial<F>>& inputs) {
  using P = Polynomial<F>;
  GcdFreeBasis<F> out;
  for (const auto& p : inputs) {
    if (p.is_zero()) fail(ErrorCode::InvalidArgument, "gcd-free basis of zero");
    for (const auto& piece : squarefree_decomposition(p).factors) detail::refine_into(out.basis, piece.factor);
  }
  for (const auto& p : inputs) {
    std::vector<unsigned> row(out.basis.size(), 0);
    P rest = p;
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      for (;;) {
        auto [q, r] = P::divmod(rest, out.basis[j]);
        if (!r.is_zero()) break;
        rest = q;
        ++row[j];
      }
    }
    if (rest.degree() != 0) fail(ErrorCode::InvalidArgument, "gcd-free basis does not cover its input");
    out.units.push_back(rest.leading());
    out.exponents.push_back(std::move(row));
  }
  return out;
}

}  // namespace descent
