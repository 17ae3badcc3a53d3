#include <doctest.h>

#include <set>

#include "descent/kummer.hpp"
#include "support.hpp"

using namespace descent;
using namespace testing_support;

TEST_CASE("class_of examples") {
  auto c = class_of(q("la^7*(la-1)^6*(la+1)^4"), 8);
  REQUIRE(c.factors().size() == 3);
  CHECK(to_string(c.factors()[0].factor) == "la");
  CHECK(c.factors()[0].multiplicity == 7);
  CHECK(to_string(c.factors()[1].factor) == "la-1");
  CHECK(c.factors()[1].multiplicity == 6);
  CHECK(to_string(c.factors()[2].factor) == "la+1");
  CHECK(c.factors()[2].multiplicity == 4);
  CHECK(c.unit().is_one());
  CHECK(c.to_string() == "la^7*(la-1)^6*(la+1)^4");

  CHECK(class_of(q("16*la^8"), 4).is_trivial());

  auto neg = class_of(q("-la"), 2);
  CHECK(neg.unit() == Rational(-1));
  REQUIRE(neg.factors().size() == 1);
  CHECK(neg.factors()[0].multiplicity == 1);
  CHECK(neg.to_string() == "-la");

  // common factors across numerator and denominator
  CHECK(class_of(q("la/(la-1)^2"), 3) == class_of(q("la*(la-1)"), 3));
  CHECK(class_of(q("(la^2-1)/(la+1)^3"), 2) == class_of(q("la-1"), 2));
  CHECK_THROWS_AS(class_of(q("0"), 3), Error);
}

TEST_CASE("unit classes over Q") {
  CHECK(class_of(Rational(-1), 5).is_trivial());
  CHECK_FALSE(class_of(Rational(-1), 4).is_trivial());
  CHECK(class_of(Rational(Integer(8), Integer(27)), 3).is_trivial());
  CHECK(class_of(Rational(12), 2).unit() == Rational(3));
  CHECK(class_of(Rational(Integer(1), Integer(2)), 3).unit() == Rational(4));
  CHECK(class_of(q("la^2/4"), 2).to_string() == "1");
  CHECK(class_of(q("la/2"), 2).to_string() == "2*la");
}

TEST_CASE("unit classes over F_p match a brute-force oracle") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    PrimeField k(p);
    for (unsigned n = 2; n <= 12; ++n) {
      std::set<std::uint64_t> nth;
      for (std::uint64_t a = 1; a < p; ++a) nth.insert(Fp(a, p).pow(n).value());
      for (std::uint64_t a = 1; a < p; ++a) {
        CHECK(class_of(Fp(a, p), n).is_trivial() == (nth.count(a) == 1));
        for (std::uint64_t b = 1; b < p; ++b) {
          const bool same = nth.count((Fp(a, p) / Fp(b, p)).value()) == 1;
          CHECK((class_of(Fp(a, p), n) == class_of(Fp(b, p), n)) == same);
        }
      }
    }
  }
}

TEST_CASE("unit classes over Q agree with exact roots") {
  for (int i = 0; i < 500; ++i) {
    Rational r = random_rational(200, true);
    unsigned n = static_cast<unsigned>(uniform(2, 12));
    CHECK(class_of(r, n).is_trivial() == rational_nth_root(r, n).has_value());
  }
}

TEST_CASE("mul_classes examples") {
  auto c3 = class_of(q("la^3"), 5), c2 = class_of(q("la^2"), 5), c4 = class_of(q("la^4"), 5);
  CHECK(mul_classes(c3, c2).is_trivial());
  CHECK(mul_classes(c4, c4) == class_of(q("la^3"), 5));
  auto triv = class_of(q("1"), 5);
  CHECK(mul_classes(c3, triv) == c3);
  CHECK_THROWS_AS(mul_classes(c3, class_of(q("la"), 4)), Error);
  try {
    mul_classes(c3, class_of(q("la"), 4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
}

TEST_CASE("is_nth_power and equal_mod_nth examples") {
  CHECK(is_nth_power(q("la^5*(la-1)^4") / q("la^5*(la-1)^4"), 6));
  CHECK(is_nth_power(Rational(-1), 5));
  CHECK_FALSE(is_nth_power(q("la^3*(la-1)"), 2));
  CHECK(equal_mod_nth(q("-la^2"), q("-la^7"), 5));
  CHECK_FALSE(equal_mod_nth(q("la"), q("la+1"), 3));
  auto r = q("(la^2+3)/(la-5)");
  CHECK(equal_mod_nth(r, r, 7));
}

TEST_CASE("same_subgroup examples") {
  CHECK(same_subgroup(q("la"), q("la^4"), 5) == 4u);
  CHECK_FALSE(same_subgroup(q("la^2"), q("la"), 4).has_value());
  auto r = q("la^3*(la+1)");
  CHECK(same_subgroup(r, r, 8) == 1u);
}

TEST_CASE("to_string round trips through parse_class") {
  auto k = qla();
  for (int i = 0; i < 200; ++i) {
    auto r = random_ratfunc(k) * k.constant(random_rational(30, true));
    unsigned n = static_cast<unsigned>(uniform(2, 9));
    auto c = class_of(r, n);
    INFO(to_string(r), " -> ", c.to_string());
    CHECK(parse_class(c.to_string(), k, n) == c);
  }
  auto f = fla(11);
  for (int i = 0; i < 200; ++i) {
    auto r = random_ratfunc(f);
    unsigned n = static_cast<unsigned>(uniform(2, 9));
    auto c = class_of(r, n);
    CHECK(parse_class(c.to_string(), f, n) == c);
  }
}

template <FieldElement F>
unsigned class_order(const PowerClass<F>& c) {
  unsigned d = 1;
  while (!power(c, d).is_trivial()) ++d;
  return d;
}

template <FieldElement F>
void check_class_properties(const RationalFunctionField<F>& k, int samples) {
  for (int i = 0; i < samples; ++i) {
    const unsigned n = static_cast<unsigned>(uniform(2, 12));
    auto r = random_ratfunc(k) * k.constant(random_element(k.base(), true));
    auto s = random_ratfunc(k) * k.constant(random_element(k.base(), true));
    auto t = random_ratfunc(k);
    auto rn = r;
    for (unsigned j = 1; j < n; ++j) rn *= r;
    CHECK(class_of(rn, n).is_trivial());
    CHECK(class_of(r * rn, n) == class_of(r, n));
    CHECK(class_of(r * s, n) == mul_classes(class_of(r, n), class_of(s, n)));
    CHECK(mul_classes(class_of(r, n), power(class_of(r, n), static_cast<long>(n) - 1)).is_trivial());

    auto c = class_of(r, n);
    for (const auto& f : c.factors()) {
      CHECK(f.multiplicity >= 1);
      CHECK(f.multiplicity < n);
      CHECK(f.factor.leading() == k.base().one());
      CHECK(is_squarefree(f.factor));
    }
    for (std::size_t a = 0; a + 1 < c.factors().size(); ++a) {
      CHECK(canonical_less(c.factors()[a].factor, c.factors()[a + 1].factor));
      for (std::size_t b = a + 1; b < c.factors().size(); ++b) {
        CHECK(gcd(c.factors()[a].factor, c.factors()[b].factor).degree() == 0);
      }
    }

    // equivalence relation on (r, r*u^n, r*u^n*v^n)
    auto u = random_ratfunc(k), v = random_ratfunc(k);
    auto un = u, vn = v;
    for (unsigned j = 1; j < n; ++j) {
      un *= u;
      vn *= v;
    }
    auto r2 = r * un, r3 = r2 * vn;
    CHECK(equal_mod_nth(r, r, n));
    CHECK(equal_mod_nth(r, r2, n) == equal_mod_nth(r2, r, n));
    CHECK(equal_mod_nth(r, r2, n));
    CHECK(equal_mod_nth(r2, r3, n));
    CHECK(equal_mod_nth(r, r3, n));
    CHECK(equal_mod_nth(r, t, n) == equal_mod_nth(t, r, n));

    // same_subgroup inverts
    long e = 1;
    do {
      e = uniform(1, static_cast<long>(n) - 1);
    } while (std::gcd(e, static_cast<long>(n)) != 1);
    auto re = power(class_of(r, n), e);
    auto k1 = same_subgroup(re, class_of(r, n));
    REQUIRE(k1.has_value());
    auto k2 = same_subgroup(class_of(r, n), re);
    REQUIRE(k2.has_value());
    // k2 inverts k1 modulo the order of the class
    CHECK(power(class_of(r, n), static_cast<long>(*k1) * *k2) == class_of(r, n));
    const unsigned ord = class_order(c);
    CHECK((static_cast<unsigned long>(*k1) * *k2) % ord == 1u % ord);
  }
}

TEST_CASE("class properties over Q(la)") { check_class_properties(qla(), 500); }

TEST_CASE("class properties over F_p(la)") {
  check_class_properties(fla(7), 500);
  check_class_properties(fla(13), 500);
}
