#pragma once

#include <cstdint>
#include <string>

#include "descent/errors.hpp"
#include "descent/rational.hpp"

namespace descent {

class Fp;

/// The field F_p for a prime p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Integer characteristic() const { return Integer(static_cast<unsigned long>(p_)); }

  Fp zero() const;
  Fp one() const;
  Fp from_integer(const Integer& n) const;
  Fp from_rational(const Rational& q) const;

  /// Smallest primitive root.
  Fp generator() const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint64_t p_;
};

/// Residue class in [0, p).
class Fp {
 public:
  using Field = PrimeField;

  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    return Fp(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) fail(ErrorCode::ModulusMismatch, "mixing F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline Fp PrimeField::zero() const { return Fp(0, p_); }
inline Fp PrimeField::one() const { return Fp(1, p_); }

}  // namespace descent
