#include "descent/rational.hpp"

#include <algorithm>
#include <map>

namespace descent {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ + b.q_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ - b.q_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ * b.q_;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  Rational r;
  r.q_ = a.q_ / b.q_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------------------

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned integer_valuation(const Integer& n, const Integer& p) {
  if (n == 0) fail(ErrorCode::ZeroInput, "valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

namespace {

// Brent's variant; returns a nontrivial factor or 0 when the iteration
// budget runs out.
Integer rho_split(const Integer& n, unsigned long seed, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer c = seed, y = 2, x, g = 1, q = 1, ys;
  auto step = [&](const Integer& v) {
    Integer w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  unsigned long r = 1, iterations = 0;
  const unsigned long m = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        Integer diff = x - y;
        q = q * abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    iterations += r;
    if (iterations > budget) return 0;
  }
  if (g == n) {
    do {
      ys = step(ys);
      Integer diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split_cofactor(const Integer& n, const Integer& bound, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const bool small = n <= bound;
  const unsigned long budget = small ? 1ul << 40 : 1ul << 22;
  for (unsigned long seed = 1; seed < 64; ++seed) {
    Integer d = rho_split(n, seed, budget);
    if (d != 0) {
      split_cofactor(d, bound, out);
      split_cofactor(n / d, bound, out);
      return;
    }
    if (!small) break;
  }
  fail(ErrorCode::FactorizationTooHard, "cofactor " + n.get_str() + " resisted rho");
}

}  // namespace

IntegerFactorization factor_integer(const Integer& n, const Integer& bound) {
  if (n == 0) fail(ErrorCode::ZeroInput, "cannot factor zero");
  IntegerFactorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Integer(p)];
    }
  }
  split_cofactor(m, bound, found);
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "zeroth root");
  if (q.is_zero()) return Rational(0);
  if (q.sign() < 0 && n % 2 == 0) return std::nullopt;
  auto root = [n](const Integer& v) -> std::optional<Integer> {
    Integer r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
  };
  auto num = root(abs(q.num()));
  auto den = root(q.den());
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  return q.sign() < 0 ? -r : r;
}

}  // namespace descent
