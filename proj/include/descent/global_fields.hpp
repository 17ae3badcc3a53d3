#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "descent/families.hpp"

namespace descent {

/// A place of Q: a finite prime p or the real place.
class Place {
 public:
  static Place finite(const Integer& p);
  static Place real() { return Place(); }

  bool is_real() const { return real_; }
  const Integer& prime() const { return p_; }
  /// "3" or "real".
  std::string to_string() const { return real_ ? "real" : p_.get_str(); }
  static Place parse(const std::string& text);

  /// Finite primes ascending, then the real place.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.real_ != b.real_) return b.real_;
    return a.p_ < b.p_;
  }
  friend bool operator==(const Place& a, const Place& b) { return a.real_ == b.real_ && a.p_ == b.p_; }

 private:
  Place() : real_(true), p_(0) {}
  explicit Place(Integer p) : real_(false), p_(std::move(p)) {}
  bool real_;
  Integer p_;
};

/// v_p(num) - v_p(den).
long padic_valuation(const Rational& r, const Integer& p);

/// Quadratic Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

struct QuaternionSplitting {
  bool split;
  std::vector<Place> ramification;  // sorted
};

/// Ramification of the quaternion algebra [a, b] over Q.
QuaternionSplitting quaternion_is_split(const Rational& a, const Rational& b);

/// The family specialized at la = la0.
struct Specialization {
  unsigned n;
  Rational lambda;
  CurvePtr<Rational> curve;
  CurvePoint<Rational> p;
};

Specialization specialize(const FamilySpec<Rational>& fam, const Rational& la0);
Specialization specialize(unsigned n, const Rational& la0);

/// Value of a class representative at la0.
Rational evaluate_class(const PowerClass<Rational>& c, const Rational& la0);

struct PlaceCondition {
  Place place;
  std::optional<long> valuation;  // finite places: v_p(delta(P)(la0))
  std::optional<int> sign;        // real place: sign of delta(P)(la0)
  bool satisfied;
};

struct LambdaCertificate {
  unsigned n;
  Rational lambda;
  Rational delta_value;  // delta(P) representative at la0
  std::vector<PlaceCondition> conditions;
  bool disc_nonzero;
};

/// Search for la0 whose specialization makes delta(P) satisfy the place
/// conditions: v_p(delta(P)(la0)) a unit mod N at finite p, and
/// delta(P)(la0) < 0 at the real place. Families and delta(P) are cached per N.
class LambdaSearch {
 public:
  explicit LambdaSearch(std::size_t budget = 1000) : budget_(budget) {}

  /// ConditionViolated listing every failed condition.
  LambdaCertificate verify(unsigned n, const Rational& la0, const std::vector<Place>& places) const;

  /// First verified candidate in the construction order; SearchExhausted
  /// after `budget` candidates.
  LambdaCertificate choose(unsigned n, const std::vector<Place>& places) const;

  /// Certificate without throwing on violated conditions.
  LambdaCertificate evaluate(unsigned n, const Rational& la0, const std::vector<Place>& places) const;

  const PowerClass<Rational>& delta_p(unsigned n) const;
  const FamilySpec<Rational>& family_for(unsigned n) const;

  /// The first `count` candidates in the construction order.
  static std::vector<Rational> candidates(unsigned n, const std::vector<Place>& places, std::size_t count);

 private:
  std::size_t budget_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, FamilySpec<Rational>> families_;
  mutable std::map<unsigned, PowerClass<Rational>> delta_;
};

LambdaCertificate choose_lambda(unsigned n, const std::vector<Place>& places, std::size_t budget = 1000);
LambdaCertificate verify_lambda(unsigned n, const Rational& la0, const std::vector<Place>& places);

}  // namespace descent
