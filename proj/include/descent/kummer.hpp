#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "descent/errors.hpp"
#include "descent/expr.hpp"
#include "descent/ratfunc.hpp"
#include "descent/squarefree.hpp"

namespace descent {

// ---------------------------------------------------------------------------
// Unit classes in F^x / (F^x)^N

/// sign (N even only) times prod p^(v_p mod N): an integer.
inline Rational canonical_unit(const Rational& u, unsigned n) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "class of zero");
  Integer rep = 1;
  auto accumulate = [&](const Integer& value, bool inverted) {
    for (const auto& [p, e] : factor_integer(value).factors) {
      unsigned r = e % n;
      if (inverted && r != 0) r = n - r;
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), r);
      rep *= pe;
    }
  };
  accumulate(abs(u.num()), false);
  accumulate(u.den(), true);
  if (u.sign() < 0 && n % 2 == 0) rep = -rep;
  return Rational(rep);
}

/// gen^k for the smallest generator gen and k in [0, gcd(N, p-1)).
inline Fp canonical_unit(const Fp& u, unsigned n) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "class of zero");
  const std::uint64_t p = u.modulus();
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(n), p - 1);
  const PrimeField k(p);
  if (g == 1) return k.one();
  const Fp gen = k.generator();
  const Fp gen_inv = gen.inverse();
  Fp rep = k.one(), probe = u;
  for (std::uint64_t i = 0; i < g; ++i) {
    if (probe.pow((p - 1) / g).is_one()) return rep;
    rep *= gen;
    probe *= gen_inv;
  }
  fail(ErrorCode::InvalidArgument, "no coset representative found");  // unreachable
}

// ---------------------------------------------------------------------------

/// Canonical element of K^x/(K^x)^N for K = F or F(la): a canonical unit of
/// F and, for each residue e in [1, N-1], the monic product of the
/// irreducibles whose exponent is e mod N. Factors sorted by canonical_less.
template <FieldElement F>
class PowerClass {
 public:
  struct Item {
    Polynomial<F> factor;
    long exponent;
  };

  /// Reduce unit * prod item.factor^item.exponent to canonical form.
  static PowerClass canonicalize(F unit, const std::vector<Item>& items, unsigned n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "power classes need N >= 2");
    if (unit.is_zero()) fail(ErrorCode::ZeroInput, "class of zero");
    std::vector<Polynomial<F>> monics;
    std::vector<long> exps;
    for (const auto& item : items) {
      if (item.factor.is_zero()) fail(ErrorCode::ZeroInput, "class of zero");
      unit = unit * power(item.factor.leading(), item.exponent);
      if (item.factor.degree() == 0) continue;
      monics.push_back(item.factor.monic());
      exps.push_back(item.exponent);
    }
    PowerClass c(n, canonical_unit(unit, n));
    if (monics.empty()) return c;
    auto basis = gcd_free_basis(monics);
    std::vector<std::optional<Polynomial<F>>> by_residue(n);
    for (std::size_t j = 0; j < basis.basis.size(); ++j) {
      long total = 0;
      for (std::size_t i = 0; i < monics.size(); ++i) total += exps[i] * static_cast<long>(basis.exponents[i][j]);
      long r = ((total % static_cast<long>(n)) + n) % n;
      if (r == 0) continue;
      auto& slot = by_residue[static_cast<std::size_t>(r)];
      slot = slot ? *slot * basis.basis[j] : basis.basis[j];
    }
    for (unsigned r = 1; r < n; ++r) {
      if (by_residue[r]) c.factors_.push_back({*by_residue[r], r});
    }
    std::sort(c.factors_.begin(), c.factors_.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.factor, b.factor); });
    return c;
  }

  unsigned modulus() const { return n_; }
  const F& unit() const { return unit_; }
  const std::vector<PowerFactor<F>>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty() && unit_ == unit_.field().one(); }

  friend bool operator==(const PowerClass& a, const PowerClass& b) {
    return a.n_ == b.n_ && a.unit_ == b.unit_ && a.factors_ == b.factors_;
  }

  std::vector<Item> items() const {
    std::vector<Item> out;
    for (const auto& f : factors_) out.push_back({f.factor, static_cast<long>(f.multiplicity)});
    return out;
  }

  /// unit * prod factor^e as an element of F(var).
  RationalFunction<F> representative(const char* var = "la") const {
    RationalFunctionField<F> field(unit_.field(), var);
    Polynomial<F> acc = Polynomial<F>::constant(unit_);
    for (const auto& f : factors_) acc *= f.factor.pow(f.multiplicity);
    return RationalFunction<F>(field, acc);
  }

  /// Product string, e.g. "-la^7*(la-1)^6"; factors printed with integer
  /// coefficients over Q, the content correction folded into the unit.
  std::string to_string(const char* var = "la") const {
    F shown_unit = unit_;
    std::vector<std::string> parts;
    for (const auto& f : factors_) {
      std::string s;
      if constexpr (std::is_same_v<F, Rational>) {
        Integer l = 1;
        for (const auto& c : f.factor.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        // l * factor has integer coefficients and content 1 (the factor is monic)
        s = format_polynomial(f.factor.scaled(Rational(l)), var);
        shown_unit = shown_unit / Rational(l).pow(static_cast<long>(f.multiplicity));
      } else {
        s = format_polynomial(f.factor, var);
      }
      bool bare = detail::is_token(s);
      std::string base = bare ? s : "(" + s + ")";
      parts.push_back(f.multiplicity == 1 ? base : base + "^" + std::to_string(f.multiplicity));
    }
    shown_unit = canonical_unit(shown_unit, n_);
    std::string out;
    std::string u = descent::to_string(shown_unit);
    if (parts.empty()) return u;
    if (u == "-1") {
      out = "-";
    } else if (u != "1") {
      out = u + "*";
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
    return out;
  }

 private:
  PowerClass(unsigned n, F unit) : n_(n), unit_(std::move(unit)) {}

  unsigned n_;
  F unit_;
  std::vector<PowerFactor<F>> factors_;
};

/// Class of a nonzero constant.
template <FieldElement F>
PowerClass<F> class_of(const F& r, unsigned n) {
  return PowerClass<F>::canonicalize(r, {}, n);
}

template <FieldElement F>
PowerClass<F> class_of(const RationalFunction<F>& r, unsigned n) {
  if (r.is_zero()) fail(ErrorCode::ZeroInput, "class of the zero function");
  const F one = r.num().field().one();
  return PowerClass<F>::canonicalize(one, {{r.num(), 1}, {r.den(), -1}}, n);
}

template <FieldElement F>
PowerClass<F> mul_classes(const PowerClass<F>& a, const PowerClass<F>& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorCode::ModulusMismatch, "classes mod " + std::to_string(a.modulus()) + " and " + std::to_string(b.modulus()));
  }
  auto items = a.items();
  for (auto& item : b.items()) items.push_back(item);
  return PowerClass<F>::canonicalize(a.unit() * b.unit(), items, a.modulus());
}

/// c^k for any integer k (negative allowed).
template <FieldElement F>
PowerClass<F> power(const PowerClass<F>& c, long k) {
  const long n = c.modulus();
  const long e = ((k % n) + n) % n;
  auto items = c.items();
  for (auto& item : items) item.exponent *= e;
  return PowerClass<F>::canonicalize(descent::power(c.unit(), e), items, c.modulus());
}

template <FieldElement F>
PowerClass<F> inverse(const PowerClass<F>& c) {
  return power(c, -1);
}

template <class K>
bool is_nth_power(const K& r, unsigned n) {
  return class_of(r, n).is_trivial();
}

template <class K>
bool equal_mod_nth(const K& a, const K& b, unsigned n) {
  return is_nth_power(a / b, n);
}

/// Smallest k in (Z/N)^x with class(a) = class(b)^k.
template <FieldElement F>
std::optional<unsigned> same_subgroup(const PowerClass<F>& a, const PowerClass<F>& b) {
  if (a.modulus() != b.modulus()) fail(ErrorCode::ModulusMismatch, "same_subgroup across moduli");
  const unsigned n = a.modulus();
  for (unsigned k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    if (power(b, static_cast<long>(k)) == a) return k;
  }
  return std::nullopt;
}

template <class K>
std::optional<unsigned> same_subgroup(const K& a, const K& b, unsigned n) {
  return same_subgroup(class_of(a, n), class_of(b, n));
}

/// Parse a product string (any rational-function expression) into its class.
template <FieldElement F>
PowerClass<F> parse_class(std::string_view text, const RationalFunctionField<F>& field, unsigned n) {
  return class_of(parse_ratfunc(text, field), n);
}

}  // namespace descent
