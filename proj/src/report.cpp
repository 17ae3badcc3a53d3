#include "descent/report.hpp"

#include <algorithm>

namespace descent {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Matched:
      return "matched";
    case VerifyStatus::Mismatched:
      return "mismatched";
    case VerifyStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::ok() const {
  return std::none_of(families.begin(), families.end(),
                      [](const FamilyReport& r) { return r.status == VerifyStatus::Mismatched; });
}

FamilyReport verify_one(unsigned n, unsigned long ch) {
  if (ch == 0) return verify_family<Rational>(fixture_for(n, 0), RationalField{});
  PrimeField k(ch);
  return verify_family<Fp>(fixture_for(n, k.characteristic()), k);
}

VerificationReport verify_all(const std::vector<unsigned>& ns, const std::vector<unsigned long>& chars,
                              bool skip_unavailable) {
  struct Task {
    unsigned n;
    unsigned long ch;
    std::future<FamilyReport> result;
  };
  std::vector<Task> tasks;
  for (unsigned long ch : chars) {
    for (unsigned n : ns) tasks.push_back({n, ch, std::async(std::launch::async, verify_one, n, ch)});
  }
  VerificationReport report;
  std::optional<Error> first_error;
  for (auto& t : tasks) {
    try {
      report.families.push_back(t.result.get());
    } catch (const Error& e) {
      if (skip_unavailable && e.code() == ErrorCode::BadCharacteristic) {
        FamilyReport skipped;
        skipped.n = t.n;
        skipped.characteristic = t.ch;
        skipped.status = VerifyStatus::Skipped;
        skipped.reason = e.what();
        report.families.push_back(std::move(skipped));
      } else if (!first_error) {
        first_error = e;
      }
    }
  }
  if (first_error) throw *first_error;
  std::sort(report.families.begin(), report.families.end(), [](const FamilyReport& a, const FamilyReport& b) {
    return a.characteristic != b.characteristic ? a.characteristic < b.characteristic : a.n < b.n;
  });
  return report;
}

}  // namespace descent
