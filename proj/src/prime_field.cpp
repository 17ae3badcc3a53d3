#include "descent/prime_field.hpp"

namespace descent {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ull << 32) || !is_probable_prime(Integer(static_cast<unsigned long>(p)))) {
    fail(ErrorCode::InvalidArgument, "F_p needs a prime p < 2^32, got " + std::to_string(p));
  }
}

Fp PrimeField::from_integer(const Integer& n) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
  return Fp(r.get_ui(), p_);
}

Fp PrimeField::from_rational(const Rational& q) const {
  Fp d = from_integer(q.den());
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, q.to_string() + " has no image in F_" + std::to_string(p_));
  return from_integer(q.num()) / d;
}

Fp PrimeField::generator() const {
  if (p_ == 2) return one();
  auto order = factor_integer(Integer(static_cast<unsigned long>(p_ - 1)));
  for (std::uint64_t g = 2; g < p_; ++g) {
    Fp candidate(g, p_);
    bool primitive = true;
    for (const auto& f : order.factors) {
      if (candidate.pow((p_ - 1) / f.prime.get_ui()).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return candidate;
  }
  fail(ErrorCode::InvalidArgument, "no primitive root");  // unreachable for prime p
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, acc(1, p_);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

}  // namespace descent
