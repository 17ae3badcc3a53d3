#include "descent/families.hpp"

#include <algorithm>

namespace descent {

namespace {

using Rule = CharacteristicRule;

std::vector<FamilyFixture> build_fixtures() {
  std::vector<FamilyFixture> v;

  v.push_back({2, Rule::NotTwo, "", "", "", "",
               std::array<std::string, 5>{"0", "-4*la", "0", "la", "0"},
               "0", "0", "256*la^4-64*la^3",
               {{1, "0", "0", "la"}},
               "Silverman, Prop. X.4.9", true});

  v.push_back({2, Rule::TwoOnly, "", "", "", "",
               std::array<std::string, 5>{"1", "1", "0", "0", "la^2"},
               "0", "la", "la^2",
               {{1, "0", "la", "la"}},
               "Kramer, Prop. 1.1(b)", true});

  v.push_back({3, Rule::Any, "", "", "", "",
               std::array<std::string, 5>{"1", "0", "la", "0", "0"},
               "0", "0", "(1-27*la)*la^3",
               {{1, "0", "0", "la^2"}, {2, "0", "-la", "la"}},
               "Kozuma, Eq. 3.5", true});

  v.push_back({4, Rule::Any, "-la", "0", "", "",
               std::array<std::string, 5>{"1", "la", "la", "0", "0"},
               "0", "0", "-16*la^5+la^4",
               {{1, "0", "0", "la^3"}, {2, "-la", "0", "la^2"}, {3, "0", "-la", "la"}},
               "transcribed table, N=4", false});

  v.push_back({5, Rule::Any, "la", "la", "", "",
               std::array<std::string, 5>{"1-la", "-la", "-la", "0", "0"},
               "0", "0", "la^5*(la^2-11*la-1)",
               {{1, "0", "0", "la^4"},
                {2, "la", "la^2", "la^3"},
                {3, "la", "0", "-la^2"},
                {4, "0", "la", "la"}},
               "transcribed table, N=5", false});

  v.push_back({6, Rule::Any, "", "", "1-la", "1",
               std::array<std::string, 5>{"1+la", "-(la-la^2)", "-(la-la^2)", "0", "0"},
               "0", "0", "la^6*(la-1)^3*(9*la-1)",
               {{1, "0", "0", "la^5*(la-1)^4"},
                {2, "la*(la-1)", "-la^2*(la-1)", "la^4*(la-1)^2"},
                {3, "-la", "la^2", "la^3"},
                {4, "la*(la-1)", "0", "la^2*(la-1)^4"},
                {5, "0", "la*(la-1)", "la*(la-1)^2"}},
               "transcribed table, N=6", false});

  v.push_back({7, Rule::Any, "", "", "1-la", "1-la",
               std::array<std::string, 5>{"1+la-la^2", "la*(1-la)^2", "la*(1-la)^2", "0", "0"},
               "0", "0", "-la^7*(la-1)^7*(la^3+5*la^2-8*la+1)",
               {{1, "0", "0", "la^6*(la-1)^3"},
                {2, "-la*(la-1)^2", "-la^2*(la-1)^3", "la^5*(la-1)^6"},
                {3, "la*(la-1)", "-la^2*(la-1)", "la^4*(la-1)^2"},
                {4, "la*(la-1)", "la^2*(la-1)^2", "-la^3*(la-1)^5"},
                {5, "-la*(la-1)^2", "0", "la^2*(la-1)^8"},
                {6, "0", "-la*(la-1)^2", "la*(la-1)^4"}},
               "transcribed table, N=7", false});

  v.push_back({8, Rule::Any, "", "", "1/(1+la)", "1-la",
               std::array<std::string, 5>{"1-la*(la-1)/(la+1)", "-la*(la-1)/(la+1)", "-la*(la-1)/(la+1)", "0", "0"},
               "0", "0", "la^8*(la-1)^4*(la^2-6*la+1)/(la+1)^10",
               {{1, "0", "0", "la^7*(la-1)^6*(la+1)^4"},
                {2, "la*(la-1)/(la+1)^2", "la^2*(la-1)^2/(la+1)^3", "la^6*(la-1)^4"},
                {3, "la*(la-1)/(la+1)", "-la^2*(la-1)/(la+1)^2", "la^5*(la-1)^2*(la+1)^4"},
                {4, "-la/(la+1)^2", "la^2/(la+1)^3", "la^4"},
                {5, "la*(la-1)/(la+1)", "la^2*(la-1)^2/(la+1)^2", "la^3*(la-1)^6*(la+1)^4"},
                {6, "la*(la-1)/(la+1)^2", "0", "la^2*(la-1)^4"},
                {7, "0", "la*(la-1)/(la+1)^2", "la*(la-1)^2*(la+1)^4"}},
               "transcribed table, N=8", false});

  v.push_back({9, Rule::Any, "", "", "la^2+la+1", "la+1", std::nullopt,
               "0", "0", "la^9*(la+1)^9*(la^2+la+1)^3*(la^3-3*la^2-6*la-1)",
               {{1, "0", "0", "la^8*(la+1)^5*(la^2+la+1)^6"},
                {2, "la*(la+1)^2*(la^2+la+1)", "la^2*(la+1)^4*(la^2+la+1)", "la^7*(la+1)^10*(la^2+la+1)^3"},
                {3, "la*(la+1)^2", "la^2*(la+1)^3", "-la^6*(la+1)^6"},
                {4, "la*(la+1)*(la^2+la+1)", "la^2*(la+1)*(la^2+la+1)^2", "la^5*(la+1)^2*(la^2+la+1)^6"},
                {5, "la*(la+1)*(la^2+la+1)", "la^2*(la+1)^2*(la^2+la+1)", "-la^4*(la+1)^7*(la^2+la+1)^3"},
                {6, "la*(la+1)^2", "la^2*(la+1)^4", "la^3*(la+1)^3"},
                {7, "la*(la+1)^2*(la^2+la+1)", "0", "-la^2*(la+1)^8*(la^2+la+1)^6"},
                {8, "0", "la*(la+1)^2*(la^2+la+1)", "la*(la+1)^4*(la^2+la+1)^3"}},
               "transcribed table, N=9", false});

  v.push_back({10, Rule::Any, "", "", "-(la+1)^2/(la^2-la-1)", "la+1", std::nullopt,
               "0", "0", "la^10*(la+1)^10*(2*la+1)^5*(4*la^2+6*la+1)/(la^2-la-1)^10",
               {{1, "", "", "la^9*(la+1)*(2*la+1)^8*(la^2-la-1)^5"},
                {2, "", "", "la^8*(la+1)^2*(2*la+1)^6"},
                {3, "", "", "la^7*(la+1)^3*(2*la+1)^4*(la^2-la-1)^5"},
                {4, "", "", "la^6*(la+1)^4*(2*la+1)^2"},
                {5, "", "", "la^5*(la+1)^5*(la^2-la-1)^5"},
                {6, "", "", "la^4*(la+1)^6*(2*la+1)^8"},
                {7, "", "", "la^3*(la+1)^7*(2*la+1)^6*(la^2-la-1)^5"},
                {8, "", "", "la^2*(la+1)^8*(2*la+1)^4"},
                {9, "", "", "la*(la+1)^9*(2*la+1)^2*(la^2-la-1)^5"}},
               "transcribed table, N=10", false});

  v.push_back({12, Rule::Any, "", "", "(2*la^2-2*la+1)/la", "(3*la^2-3*la+1)/la^2", std::nullopt,
               "0", "0",
               "(la-1)^12*(2*la-1)^6*(3*la^2-3*la+1)^4*(2*la^2-2*la+1)^3*(6*la^2-6*la+1)/la^24",
               {{1, "", "", "-la^11*(la-1)^11*(2*la-1)^10*(2*la^2-2*la+1)^8*(3*la^2-3*la+1)^9"},
                {2, "", "", "la^10*(la-1)^10*(2*la-1)^8*(2*la^2-2*la+1)^4*(3*la^2-3*la+1)^6"},
                {3, "", "", "-la^9*(la-1)^9*(2*la-1)^6*(3*la^2-3*la+1)^3"},
                {4, "", "", "la^8*(la-1)^8*(2*la-1)^4*(2*la^2-2*la+1)^8"},
                {5, "", "", "-la^7*(la-1)^7*(2*la-1)^2*(2*la^2-2*la+1)^4*(3*la^2-3*la+1)^9"},
                {6, "", "", "la^6*(la-1)^6*(3*la^2-3*la+1)^6"},
                {7, "", "", "-la^5*(la-1)^5*(2*la-1)^10*(2*la^2-2*la+1)^8*(3*la^2-3*la+1)^3"},
                {8, "", "", "la^4*(la-1)^4*(2*la-1)^8*(2*la^2-2*la+1)^4"},
                {9, "", "", "-la^3*(la-1)^3*(2*la-1)^6*(3*la^2-3*la+1)^9"},
                {10, "", "", "la^2*(la-1)^2*(2*la-1)^4*(2*la^2-2*la+1)^8*(3*la^2-3*la+1)^6"},
                {11, "", "", "-la*(la-1)*(2*la-1)^2*(2*la^2-2*la+1)^4*(3*la^2-3*la+1)^3"}},
               "transcribed table, N=12", false});

  return v;
}

}  // namespace

const std::vector<FamilyFixture>& fixtures() {
  static const std::vector<FamilyFixture> all = build_fixtures();
  return all;
}

const std::vector<unsigned>& supported_n() {
  static const std::vector<unsigned> ns{2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  return ns;
}

const FamilyFixture& fixture_for(unsigned n, const Integer& ch) {
  const auto& ns = supported_n();
  if (std::find(ns.begin(), ns.end(), n) == ns.end()) {
    fail(ErrorCode::UnsupportedN, "unsupported N=" + std::to_string(n) + " (no family for this level)");
  }
  const bool two = ch == 2;
  // N = 2 and N = 3 come from the literature in every characteristic; the
  // Miller construction needs char not dividing N.
  if (n >= 4 && ch != 0 && Integer(n) % ch == 0) {
    fail(ErrorCode::BadCharacteristic, "characteristic " + ch.get_str() + " divides N=" + std::to_string(n));
  }
  for (const auto& fx : fixtures()) {
    if (fx.n != n) continue;
    if (fx.rule == Rule::NotTwo && two) continue;
    if (fx.rule == Rule::TwoOnly && !two) continue;
    return fx;
  }
  fail(ErrorCode::BadCharacteristic, "no N=" + std::to_string(n) + " family in characteristic " + ch.get_str());
}

}  // namespace descent
