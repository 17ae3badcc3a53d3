#pragma once

#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "descent/families.hpp"

namespace descent {

enum class VerifyStatus { Matched, Mismatched, Skipped };

std::string to_string(VerifyStatus s);

struct Mismatch {
  std::string what;  // "delta" or "point"
  unsigned n;
  std::string computed, fixture;
};

struct FamilyReport {
  unsigned n = 0;
  Integer characteristic;
  VerifyStatus status = VerifyStatus::Matched;
  std::vector<Mismatch> mismatches;
  std::string reason;  // skipped only
  double seconds = 0;
  std::size_t entries_checked = 0;
  std::optional<std::string> norm_constant, unit, function;
};

struct VerificationReport {
  std::vector<FamilyReport> families;  // sorted by (characteristic, N)
  bool ok() const;
};

/// Compare the computed table and multiples of P with the fixture, as
/// classes in K^x/(K^x)^N and as exact coordinates.
template <FieldElement F>
FamilyReport verify_family(const FamilyFixture& fx, const typename F::Field& base) {
  FamilyReport rep;
  rep.n = fx.n;
  rep.characteristic = base.characteristic();
  const auto start = std::chrono::steady_clock::now();
  auto fam = family<F>(fx, base);
  auto table = delta_table(fam);
  auto expected = fixture_classes<F>(fx, base);
  for (const auto& [m, cls] : expected) {
    ++rep.entries_checked;
    auto it = table.entries.find(m);
    if (it == table.entries.end()) {
      rep.mismatches.push_back({"delta", m, "<missing>", cls.to_string()});
    } else if (!(it->second == cls)) {
      rep.mismatches.push_back({"delta", m, it->second.to_string(), cls.to_string()});
    }
  }
  const auto kl = la_field<F>(base);
  for (const auto& row : fx.rows) {
    if (row.x.empty()) continue;
    auto want = CurvePoint<RationalFunction<F>>::affine(detail::parse_fixture_value(row.x, kl),
                                                       detail::parse_fixture_value(row.y, kl));
    const auto& got = table.points.at(row.n);
    if (!(got == want)) {
      rep.mismatches.push_back({"point", row.n, "(" + to_string(got.x()) + ", " + to_string(got.y()) + ")",
                                "(" + row.x + ", " + row.y + ")"});
    }
  }
  if (table.norm_constant) rep.norm_constant = to_string(*table.norm_constant);
  if (table.unit) rep.unit = table.unit->to_string();
  if (table.function) rep.function = table.function->to_string();
  rep.status = rep.mismatches.empty() ? VerifyStatus::Matched : VerifyStatus::Mismatched;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// One report per (N, characteristic). Characteristics where no family is
/// defined yield Skipped when `skip_unavailable`, otherwise the error
/// propagates. Each pair runs as its own task.
VerificationReport verify_all(const std::vector<unsigned>& ns, const std::vector<unsigned long>& chars,
                              bool skip_unavailable);

FamilyReport verify_one(unsigned n, unsigned long ch);

}  // namespace descent
