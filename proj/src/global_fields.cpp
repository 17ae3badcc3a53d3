#include "descent/global_fields.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace descent {

Place Place::finite(const Integer& p) {
  if (p < 2 || !is_probable_prime(p)) fail(ErrorCode::InvalidArgument, p.get_str() + " is not a prime");
  return Place(p);
}

Place Place::parse(const std::string& text) {
  if (text == "real" || text == "inf" || text == "oo") return real();
  Integer p;
  if (text.empty() || p.set_str(text, 10) != 0) fail(ErrorCode::InvalidArgument, "bad place '" + text + "'");
  return finite(p);
}

long padic_valuation(const Rational& r, const Integer& p) {
  if (r.is_zero()) fail(ErrorCode::ZeroInput, "valuation of zero");
  return static_cast<long>(integer_valuation(r.num(), p)) - static_cast<long>(integer_valuation(r.den(), p));
}

namespace {

/// r = p^v * u with u a p-adic unit; returns u.
Rational unit_part(const Rational& r, const Integer& p, long v) {
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v >= 0 ? r / Rational(pv) : r * Rational(pv);
}

/// A p-adic unit rational reduced mod m (gcd(den, m) = 1).
Integer residue(const Rational& u, const Integer& m) {
  Integer inv, out;
  if (!mpz_invert(inv.get_mpz_t(), u.den().get_mpz_t(), m.get_mpz_t())) {
    fail(ErrorCode::InvalidArgument, "denominator not invertible");
  }
  out = u.num() * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
  return out;
}

int legendre(const Rational& u, const Integer& p) {
  Integer r = residue(u, p);
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "Hilbert symbol of zero");
  if (v.is_real()) return a.sign() < 0 && b.sign() < 0 ? -1 : 1;
  const Integer& p = v.prime();
  const long alpha = padic_valuation(a, p), beta = padic_valuation(b, p);
  const Rational u = unit_part(a, p, alpha), w = unit_part(b, p, beta);
  if (p == 2) {
    const Integer eight = 8;
    const long ur = residue(u, eight).get_si(), wr = residue(w, eight).get_si();
    auto eps = [](long x) { return ((x - 1) / 2) % 2; };
    auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
    const long e = eps(ur) * eps(wr) + alpha * omega(wr) + beta * omega(ur);
    return (((e % 2) + 2) % 2) ? -1 : 1;
  }
  int s = 1;
  const Integer half = (p - 1) / 2;
  if ((alpha & 1) && (beta & 1) && mpz_odd_p(half.get_mpz_t())) s = -s;
  if (beta & 1) s *= legendre(u, p);
  if (alpha & 1) s *= legendre(w, p);
  return s;
}

QuaternionSplitting quaternion_is_split(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "quaternion algebra with a zero slot");
  std::set<Integer> primes{2};
  for (const Integer& n : {a.num(), a.den(), b.num(), b.den()}) {
    Integer m = abs(n);
    if (m <= 1) continue;
    for (const auto& pp : factor_integer(m).factors) primes.insert(pp.prime);
  }
  QuaternionSplitting out{true, {}};
  for (const auto& p : primes) {
    Place v = Place::finite(p);
    if (hilbert_symbol(a, b, v) == -1) out.ramification.push_back(v);
  }
  if (hilbert_symbol(a, b, Place::real()) == -1) out.ramification.push_back(Place::real());
  if (out.ramification.size() % 2 != 0) {
    fail(ErrorCode::InvalidArgument, "odd number of ramified places for [" + a.to_string() + "," + b.to_string() + "]");
  }
  out.split = out.ramification.empty();
  return out;
}

Specialization specialize(const FamilySpec<Rational>& fam, const Rational& la0) {
  auto at = [&](const RationalFunction<Rational>& f) {
    try {
      return f.evaluate(la0);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PoleAtPoint) {
        fail(ErrorCode::PoleInCoefficients, "family coefficients have a pole at la=" + la0.to_string());
      }
      throw;
    }
  };
  const auto& c = *fam.curve;
  auto raw = WeierstrassCurve<Rational>::raw(at(c.a1()), at(c.a2()), at(c.a3()), at(c.a4()), at(c.a6()));
  if (raw.discriminant().is_zero()) {
    fail(ErrorCode::SingularSpecialization, "discriminant vanishes at la=" + la0.to_string());
  }
  auto curve = std::make_shared<const WeierstrassCurve<Rational>>(raw.a1(), raw.a2(), raw.a3(), raw.a4(), raw.a6());
  auto p = CurvePoint<Rational>::affine(at(fam.p.x()), at(fam.p.y()));
  if (curve->order_of_point(p, 2 * static_cast<long>(fam.n)) != static_cast<long>(fam.n)) {
    fail(ErrorCode::SingularSpecialization, "P loses exact order " + std::to_string(fam.n) + " at la=" + la0.to_string());
  }
  return {fam.n, la0, curve, p};
}

Specialization specialize(unsigned n, const Rational& la0) {
  return specialize(family<Rational>(n, RationalField{}), la0);
}

Rational evaluate_class(const PowerClass<Rational>& c, const Rational& la0) {
  return c.representative().evaluate(la0);
}

// ---------------------------------------------------------------------------

const FamilySpec<Rational>& LambdaSearch::family_for(unsigned n) const {
  std::lock_guard lock(mutex_);
  auto it = families_.find(n);
  if (it == families_.end()) it = families_.emplace(n, family<Rational>(n, RationalField{})).first;
  return it->second;
}

const PowerClass<Rational>& LambdaSearch::delta_p(unsigned n) const {
  const auto& fam = family_for(n);
  {
    std::lock_guard lock(mutex_);
    auto it = delta_.find(n);
    if (it != delta_.end()) return it->second;
  }
  auto table = delta_table(fam);
  std::lock_guard lock(mutex_);
  return delta_.emplace(n, table.entries.at(1)).first->second;
}

namespace {

void check_places(unsigned n, const std::vector<Place>& places) {
  for (const auto& v : places) {
    if (v.is_real() && n % 2 != 0) {
      fail(ErrorCode::InvalidArgument, "the real place imposes no condition for odd N=" + std::to_string(n));
    }
  }
}

bool unit_mod(long v, unsigned n) {
  long r = ((v % static_cast<long>(n)) + n) % n;
  return std::gcd(r, static_cast<long>(n)) == 1;
}

}  // namespace

LambdaCertificate LambdaSearch::evaluate(unsigned n, const Rational& la0, const std::vector<Place>& places) const {
  check_places(n, places);
  const auto& fam = family_for(n);
  specialize(fam, la0);
  Rational d = evaluate_class(delta_p(n), la0);
  if (d.is_zero()) fail(ErrorCode::SingularSpecialization, "delta(P) vanishes at la=" + la0.to_string());
  LambdaCertificate cert{n, la0, d, {}, true};
  std::vector<Place> sorted = places;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& v : sorted) {
    if (v.is_real()) {
      const int s = d.sign();
      cert.conditions.push_back({v, std::nullopt, s, s < 0});
    } else {
      const long val = padic_valuation(d, v.prime());
      cert.conditions.push_back({v, val, std::nullopt, unit_mod(val, n)});
    }
  }
  return cert;
}

LambdaCertificate LambdaSearch::verify(unsigned n, const Rational& la0, const std::vector<Place>& places) const {
  LambdaCertificate cert = evaluate(n, la0, places);
  std::string violations;
  for (const auto& c : cert.conditions) {
    if (c.satisfied) continue;
    if (!violations.empty()) violations += "; ";
    if (c.place.is_real()) {
      violations += "real: delta(P)(" + la0.to_string() + ") is not negative";
    } else {
      violations += c.place.to_string() + ": valuation " + std::to_string(*c.valuation) + " is not a unit mod " +
                    std::to_string(n);
    }
  }
  if (!violations.empty()) fail(ErrorCode::ConditionViolated, violations);
  return cert;
}

std::vector<Rational> LambdaSearch::candidates(unsigned n, const std::vector<Place>& places, std::size_t count) {
  Integer b = 1;
  for (const auto& v : places) {
    if (!v.is_real() && b % v.prime() != 0) b *= v.prime();
  }
  std::vector<Rational> out;
  if (n == 10) {
    // la0 = b m'/m close to 1 with m, m' prime to b
    for (Integer mp = 1; out.size() < count; ++mp) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), mp.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      const Integer center = b * mp;
      for (Integer d = 1; d <= center && out.size() < count; ++d) {
        for (const Integer& m : {Integer(center - d), Integer(center + d)}) {
          if (m <= 0 || out.size() >= count) continue;
          mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), b.get_mpz_t());
          if (g == 1) out.emplace_back(center, m);
        }
      }
    }
    return out;
  }
  const int sign = (n == 6 || n == 8) ? -1 : 1;
  for (std::size_t t = 1; out.size() < count; ++t) out.emplace_back(b * Integer(static_cast<unsigned long>(t)) * sign);
  return out;
}

LambdaCertificate LambdaSearch::choose(unsigned n, const std::vector<Place>& places) const {
  static const std::vector<unsigned> allowed{6, 7, 8, 9, 10, 12};
  if (std::find(allowed.begin(), allowed.end(), n) == allowed.end()) {
    fail(ErrorCode::UnsupportedN, "choose-lambda supports N in {6,7,8,9,10,12}");
  }
  check_places(n, places);
  for (const auto& la0 : candidates(n, places, budget_)) {
    try {
      return verify(n, la0, places);
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::ConditionViolated:
        case ErrorCode::SingularSpecialization:
        case ErrorCode::PoleInCoefficients:
          continue;
        default:
          throw;
      }
    }
  }
  fail(ErrorCode::SearchExhausted, "no la0 within " + std::to_string(budget_) + " candidates");
}

namespace {
const LambdaSearch& default_search() {
  static const LambdaSearch search;
  return search;
}
}  // namespace

LambdaCertificate choose_lambda(unsigned n, const std::vector<Place>& places, std::size_t budget) {
  if (budget == 1000) return default_search().choose(n, places);
  return LambdaSearch(budget).choose(n, places);
}

LambdaCertificate verify_lambda(unsigned n, const Rational& la0, const std::vector<Place>& places) {
  return default_search().verify(n, la0, places);
}

}  // namespace descent
