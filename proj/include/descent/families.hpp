#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descent/miller.hpp"
#include "descent/prime_field.hpp"
#include "descent/rational.hpp"

namespace descent {

/// Which characteristics a fixture family is defined for.
enum class CharacteristicRule { Any, NotTwo, TwoOnly };

struct FixtureRow {
  unsigned n;
  std::string x, y;  // empty when the coordinates are not transcribed
  std::string delta;
};

/// One transcribed family: parameters, the displayed Weierstrass equation,
/// discriminant and delta table, all in the expression grammar over "la".
struct FamilyFixture {
  unsigned n;
  CharacteristicRule rule;
  std::string b, c;  // Tate parameters when given directly
  std::string r, s;  // c = s(r-1), b = rc
  std::optional<std::array<std::string, 5>> printed;  // a1, a2, a3, a4, a6
  std::string px, py;
  std::string disc;
  std::vector<FixtureRow> rows;  // n = 1..N-1
  std::string provenance;
  bool delta_hardcoded;
};

const std::vector<FamilyFixture>& fixtures();
const std::vector<unsigned>& supported_n();

/// Fixture used for N in characteristic ch (0 for Q).
const FamilyFixture& fixture_for(unsigned n, const Integer& ch);

template <FieldElement F>
struct FamilySpec {
  using K = RationalFunction<F>;
  unsigned n;
  Integer characteristic;
  const FamilyFixture* fixture;  // not owned
  std::optional<K> r, s;
  CurvePtr<K> curve;
  CurvePoint<K> p;
  K disc;
  std::vector<std::string> notes;
};

namespace detail {

template <FieldElement F>
RationalFunction<F> parse_fixture_value(const std::string& text, const RationalFunctionField<F>& field) {
  try {
    return parse_ratfunc(text, field);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) {
      fail(ErrorCode::BadCharacteristic, "'" + text + "' has a pole in this characteristic");
    }
    throw;
  }
}

}  // namespace detail

template <FieldElement F>
RationalFunctionField<F> la_field(const typename F::Field& base) {
  return RationalFunctionField<F>(base, "la");
}

/// The family for N over base(la). Candidate curves come from the Tate
/// parameters and from the displayed equation; the first one whose
/// discriminant matches the transcription and on which P has exact order N
/// is kept, and any disagreeing candidate is recorded in `notes`.
template <FieldElement F>
FamilySpec<F> family(const FamilyFixture& fx, const typename F::Field& base) {
  using K = RationalFunction<F>;
  const unsigned n = fx.n;
  const Integer ch = base.characteristic();
  const auto kl = la_field<F>(base);
  auto parse = [&](const std::string& t) { return detail::parse_fixture_value(t, kl); };

  const K disc_expected = parse(fx.disc);
  if (disc_expected.is_zero()) fail(ErrorCode::BadCharacteristic, "discriminant vanishes identically mod " + ch.get_str());
  auto p = CurvePoint<K>::affine(parse(fx.px), parse(fx.py));

  struct Candidate {
    std::string label;
    WeierstrassCurve<K> curve;
  };
  std::vector<Candidate> candidates;
  std::optional<K> r, s;
  auto tate_raw = [&](const K& b, const K& c) { return WeierstrassCurve<K>::raw(kl.one() - c, -b, -b, kl.zero(), kl.zero()); };
  if (!fx.r.empty()) {
    r = parse(fx.r);
    s = parse(fx.s);
    K c = *s * (*r - kl.one());
    K b = *r * c;
    candidates.push_back({"Tate parameters (r, s)", tate_raw(b, c)});
  } else if (!fx.b.empty()) {
    candidates.push_back({"Tate parameters (b, c)", tate_raw(parse(fx.b), parse(fx.c))});
  }
  if (fx.printed) {
    const auto& a = *fx.printed;
    candidates.push_back({"displayed equation",
                          WeierstrassCurve<K>::raw(parse(a[0]), parse(a[1]), parse(a[2]), parse(a[3]), parse(a[4]))});
  }

  std::vector<std::string> notes{fx.provenance};
  std::optional<std::size_t> winner;
  std::vector<std::string> rejections;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& cand = candidates[i];
    K d = cand.curve.discriminant();
    std::string why;
    if (d.is_zero()) {
      why = "singular";
    } else if (!(d == disc_expected)) {
      why = "discriminant " + to_string(d) + " differs from the transcribed one";
    } else if (!cand.curve.contains(p)) {
      why = "P is not on the curve";
    } else {
      auto order = cand.curve.order_of_point(p, 2 * static_cast<long>(n));
      if (order != static_cast<long>(n)) {
        why = order ? "P has order " + std::to_string(*order) : "P has order > " + std::to_string(2 * n);
      }
    }
    if (why.empty()) {
      if (!winner) winner = i;
    } else {
      rejections.push_back(cand.label + " rejected: " + why);
    }
  }
  if (!winner) {
    bool all_singular = true;
    for (const auto& cand : candidates) all_singular = all_singular && cand.curve.discriminant().is_zero();
    if (all_singular) fail(ErrorCode::BadCharacteristic, "family is singular mod " + ch.get_str());
    fail(ErrorCode::InvalidArgument, "no candidate curve for N=" + std::to_string(n) + " is consistent");
  }
  for (auto& why : rejections) notes.push_back(std::move(why));
  const auto& chosen = candidates[*winner].curve;
  auto curve = std::make_shared<const WeierstrassCurve<K>>(chosen.a1(), chosen.a2(), chosen.a3(), chosen.a4(),
                                                           chosen.a6());
  return FamilySpec<F>{n, ch, &fx, r, s, curve, p, disc_expected, std::move(notes)};
}

template <FieldElement F>
FamilySpec<F> family(unsigned n, const typename F::Field& base) {
  return family<F>(fixture_for(n, base.characteristic()), base);
}

/// Transcribed delta classes, reduced into base(la).
template <FieldElement F>
std::map<unsigned, PowerClass<F>> fixture_classes(const FamilyFixture& fx, const typename F::Field& base) {
  const auto kl = la_field<F>(base);
  std::map<unsigned, PowerClass<F>> out;
  for (const auto& row : fx.rows) out.emplace(row.n, class_of(detail::parse_fixture_value(row.delta, kl), fx.n));
  return out;
}

/// delta(nP) for the family: computed by Miller and normalization for
/// N >= 4, literature data for N = 2, 3.
template <FieldElement F>
DescentTable<RationalFunction<F>> delta_table(const FamilySpec<F>& fam) {
  using K = RationalFunction<F>;
  DescentTable<K> table;
  if (fam.fixture->delta_hardcoded) {
    table.n = fam.n;
    table.entries = fixture_classes<F>(*fam.fixture, fam.curve->field().base());
    CurvePoint<K> q = fam.p;
    for (unsigned m = 1; m < fam.n; ++m, q = fam.curve->add(q, fam.p)) table.points.emplace(m, q);
  } else {
    table = descent_table(fam.curve, fam.p, fam.n);
  }
  table.provenance = fam.fixture->provenance;
  return table;
}

template <FieldElement F>
DescentTable<RationalFunction<F>> delta_table(unsigned n, const typename F::Field& base) {
  return delta_table(family<F>(n, base));
}

}  // namespace descent
