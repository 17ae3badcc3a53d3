#include <doctest.h>

#include "descent/families.hpp"
#include "support.hpp"

using namespace descent;
using namespace testing_support;

namespace {

template <FieldElement K>
CurvePtr<K> share(WeierstrassCurve<K> e) {
  return std::make_shared<const WeierstrassCurve<K>>(std::move(e));
}

CurvePtr<QF> curve4() { return share(tate_normal(q("-la"), q("0"))); }
CurvePtr<QF> curve5() { return share(tate_normal(q("la"), q("la"))); }

CurvePoint<QF> qpt(const char* x, const char* y) { return CurvePoint<QF>::affine(q(x), q(y)); }

/// Random nonsingular curve over F_p with a1, a3 generally nonzero.
CurvePtr<Fp> random_fp_curve(const PrimeField& k) {
  for (;;) {
    std::array<Fp, 5> a{random_fp(k), random_fp(k), random_fp(k), random_fp(k), random_fp(k)};
    if (WeierstrassCurve<Fp>::raw(a[0], a[1], a[2], a[3], a[4]).discriminant().is_zero()) continue;
    return share(WeierstrassCurve<Fp>(a[0], a[1], a[2], a[3], a[4]));
  }
}

template <FieldElement K>
CurveFunction<K> random_function(const CurvePtr<K>& e, int degree, bool denominators = true) {
  auto fx = CurveFunction<K>::x_field(*e);
  auto part = [&] {
    auto num = random_polynomial<K>(e->field(), static_cast<int>(uniform(0, degree)));
    auto den = random_polynomial<K>(e->field(), denominators ? static_cast<int>(uniform(0, 1)) : 0);
    return RationalFunction<K>(fx, num) / RationalFunction<K>(fx, den);
  };
  return CurveFunction<K>(e, part(), uniform(0, 3) == 0 ? fx.zero() : part());
}

}  // namespace

TEST_CASE("multiplication reduces y^2") {
  auto e = curve4();
  auto y = CurveFunction<QF>::y(e);
  CHECK((y * y).to_string() == "x^3+la*x^2+(-x-la)*y");
  CHECK(y * y == parse_curve_function<QF>("x^3+la*x^2-x*y-la*y", e));
  auto one = CurveFunction<QF>::constant(e, q("1"));
  auto f = parse_curve_function<QF>("x^2-(x+1)*y", e);
  CHECK(f * one == f);
  auto g = parse_curve_function<QF>("la*x+3*y", e);
  CHECK((f + g) == parse_curve_function<QF>("x^2+la*x+(2-x)*y", e));
  CHECK_THROWS_AS(f + CurveFunction<QF>::y(curve5()), Error);
}

TEST_CASE("conjugation") {
  auto e = curve5();
  auto y = CurveFunction<QF>::y(e);
  // y -> -y - a1 x - a3 with a1 = 1 - la, a3 = -la
  CHECK(y.conjugate() == parse_curve_function<QF>("-y-(1-la)*x+la", e));
  CHECK(CurveFunction<QF>::x(e).conjugate() == CurveFunction<QF>::x(e));
  for (int i = 0; i < 100; ++i) {
    auto f = random_function(e, 3);
    CHECK(f.conjugate().conjugate() == f);
  }
}

TEST_CASE("norm examples") {
  auto e = curve5();
  auto fx = CurveFunction<QF>::x_field(*e);
  auto c = q("la+2");
  auto xc = CurveFunction<QF>::from_x(e, fx.variable() - fx.constant(c));
  CHECK(xc.norm_to_base() == (fx.variable() - fx.constant(c)) * (fx.variable() - fx.constant(c)));

  auto ny = CurveFunction<QF>::y(e).norm_to_base();
  auto x = fx.variable();
  CHECK(ny == -(x * x * x + fx.constant(e->a2()) * x * x + fx.constant(e->a4()) * x + fx.constant(e->a6())));

  // x^2 - (x+1)y on the N=5 curve: norm is a constant times x^5
  auto f = parse_curve_function<QF>("x^2-(x+1)*y", e);
  auto n = f.norm_to_base();
  REQUIRE(n.is_polynomial());
  CHECK(n.num().degree() == 5);
  CHECK(n.num().term_count() == 1);
}

TEST_CASE("norm is multiplicative") {
  for (std::uint64_t p : {5ULL, 7ULL, 13ULL}) {
    PrimeField k(p);
    for (int i = 0; i < 70; ++i) {
      auto e = random_fp_curve(k);
      auto f = random_function(e, 3), g = random_function(e, 3);
      CHECK((f * g).norm_to_base() == f.norm_to_base() * g.norm_to_base());
    }
  }
  auto e = curve4();
  for (int i = 0; i < 20; ++i) {
    auto f = random_function(e, 2, false), g = random_function(e, 2, false);
    CHECK((f * g).norm_to_base() == f.norm_to_base() * g.norm_to_base());
  }
}

TEST_CASE("reduction is canonical") {
  PrimeField k(11);
  for (int i = 0; i < 100; ++i) {
    auto e = random_fp_curve(k);
    auto f = random_function(e, 2), g = random_function(e, 2), h = random_function(e, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero() && !g.norm_to_base().is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("lines and verticals") {
  auto e = curve5();
  auto p = qpt("0", "0");
  CHECK(vertical_at(e, p) == CurveFunction<QF>::x(e));
  auto l = line_through(e, p, qpt("la", "la^2"));
  CHECK(l == parse_curve_function<QF>("y-la*x", e));

  // the line vanishes at P, Q and -(P+Q)
  auto q2 = qpt("la", "la^2");
  auto r = e->neg(e->add(p, q2));
  CHECK(l.evaluate_at(p).is_zero());
  CHECK(l.evaluate_at(q2).is_zero());
  CHECK(l.evaluate_at(r).is_zero());

  // tangent at a 2-torsion point of the N=2 family is vertical
  auto f2 = family<Rational>(2, RationalField{});
  auto t = f2.curve->scalar_mul(1, f2.p);
  REQUIRE(f2.curve->scalar_mul(2, t).is_infinity());
  try {
    line_through(f2.curve, t, t);
    FAIL("expected VerticalSlope");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::VerticalSlope);
  }
  CHECK_THROWS_AS(line_through(e, p, e->neg(p)), Error);
}

TEST_CASE("lines vanish where they should over F_p") {
  PrimeField k(13);
  for (int i = 0; i < 50; ++i) {
    auto e = random_fp_curve(k);
    std::vector<CurvePoint<Fp>> pts;
    for (std::uint64_t x = 0; x < 13; ++x) {
      for (std::uint64_t y = 0; y < 13; ++y) {
        auto pt = CurvePoint<Fp>::affine(Fp(x, 13), Fp(y, 13));
        if (e->contains(pt)) pts.push_back(pt);
      }
    }
    if (pts.size() < 2) continue;
    const auto& a = pts[static_cast<std::size_t>(uniform(0, static_cast<long>(pts.size()) - 1))];
    const auto& b = pts[static_cast<std::size_t>(uniform(0, static_cast<long>(pts.size()) - 1))];
    if (e->add(a, b).is_infinity()) {
      CHECK_THROWS_AS(line_through(e, a, b), Error);
      continue;
    }
    auto l = line_through(e, a, b);
    CHECK(l.evaluate_at(a).is_zero());
    CHECK(l.evaluate_at(b).is_zero());
    CHECK(l.evaluate_at(e->neg(e->add(a, b))).is_zero());
    CHECK(vertical_at(e, a).evaluate_at(e->neg(a)).is_zero());
  }
}

TEST_CASE("evaluation at points") {
  auto e = curve5();
  auto f = parse_curve_function<QF>("x^2-(x+1)*y", e);
  CHECK(f.evaluate_at(qpt("la", "la^2")) == q("-la^3"));
  CHECK(class_of(f.evaluate_at(qpt("la", "la^2")), 5) == class_of(q("la^3"), 5));
  CHECK(CurveFunction<QF>::constant(e, q("7")).evaluate_at(qpt("la", "la^2")) == q("7"));
  CHECK(CurveFunction<QF>::x(e).evaluate_at(qpt("0", "0")).is_zero());
  auto fx = CurveFunction<QF>::x_field(*e);
  auto pole = CurveFunction<QF>::from_x(e, fx.one() / fx.variable());
  try {
    pole.evaluate_at(qpt("0", "0"));
    FAIL("expected PoleAtPoint");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PoleAtPoint);
  }
  CHECK_THROWS_AS(f.evaluate_at(CurvePoint<QF>::infinity()), Error);
}
