#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descent/errors.hpp"

namespace descent {

using Integer = mpz_class;

class Rational;

/// The field Q. Stateless; exists so generic code can ask any element for
/// its zero, one and characteristic.
struct RationalField {
  Rational zero() const;
  Rational one() const;
  Rational from_integer(const Integer& n) const;
  Integer characteristic() const { return 0; }
  bool operator==(const RationalField&) const = default;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  using Field = RationalField;

  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  static Rational parse(const std::string& text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  RationalField field() const { return {}; }

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (DivisionByZero on 0).
  Rational pow(long e) const;

  /// "p" or "p/q".
  std::string to_string() const;

 private:
  mpq_class q_;
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_integer(const Integer& n) const { return Rational(n); }

// ---------------------------------------------------------------------------
// Integer utilities

struct PrimePower {
  Integer prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

struct IntegerFactorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // primes ascending
};

/// Cofactors above this bound that resist trial division and rho are
/// reported as FactorizationTooHard.
inline const Integer kDefaultFactorBound = Integer(1) << 64;

/// Trial division, then Pollard-Brent rho on composite cofactors.
IntegerFactorization factor_integer(const Integer& n, const Integer& bound = kDefaultFactorBound);

bool is_probable_prime(const Integer& n);

/// Exponent of p in n (n != 0).
unsigned integer_valuation(const Integer& n, const Integer& p);

/// r with r^n = q when it exists over Q.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

}  // namespace descent
