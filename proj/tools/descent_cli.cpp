#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "descent/serialize.hpp"

using namespace descent;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::vector<unsigned long> chars;
  bool json() const { return format == "json"; }
  unsigned long single_char() const {
    if (chars.size() > 1) fail(ErrorCode::InvalidArgument, "this command takes a single --char");
    return chars.empty() ? 0 : chars.front();
  }
  void require_q(const char* cmd) const {
    if (single_char() != 0) fail(ErrorCode::InvalidArgument, std::string(cmd) + " works over Q only");
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <FieldElement F>
void render_table(const FamilySpec<F>& fam, const DescentTable<RationalFunction<F>>& table, const Options& opt) {
  if (opt.json()) {
    print_json(family_json(fam, table));
    return;
  }
  std::cout << "N = " << fam.n << ", characteristic " << fam.characteristic.get_str() << "\n";
  for (const auto& note : fam.notes) std::cout << "  note: " << note << "\n";
  const auto& c = *fam.curve;
  std::cout << "curve: [a1, a2, a3, a4, a6] = [" << to_string(c.a1()) << ", " << to_string(c.a2()) << ", "
            << to_string(c.a3()) << ", " << to_string(c.a4()) << ", " << to_string(c.a6()) << "]\n";
  if (fam.r) std::cout << "r = " << to_string(*fam.r) << ", s = " << to_string(*fam.s) << "\n";
  std::cout << "disc = " << to_string(fam.disc) << "\n";
  if (table.function) std::cout << "f = " << table.function->to_string() << "\n";
  if (table.norm_constant) {
    const auto xp = fam.p.x();
    const std::string base = xp.is_zero() ? "x" : "(x-(" + to_string(xp) + "))";
    std::cout << "norm(f) = (" << to_string(*table.norm_constant) << ")*" << base << "^" << fam.n << "\n";
  }
  if (table.unit) std::cout << "u = " << table.unit->to_string() << "\n";
  std::cout << "\n";
  std::vector<std::array<std::string, 3>> rows;
  for (const auto& [n, cls] : table.entries) {
    const auto& p = table.points.at(n);
    rows.push_back({std::to_string(n) + "P", "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")", cls.to_string()});
  }
  std::size_t w0 = 2, w1 = 10;
  for (const auto& r : rows) {
    w0 = std::max(w0, r[0].size());
    w1 = std::max(w1, r[1].size());
  }
  std::cout << std::left << std::setw(static_cast<int>(w0)) << "nP" << " | " << std::setw(static_cast<int>(w1))
            << "(x, y)" << " | delta(nP)\n";
  std::cout << std::string(w0 + w1 + 18, '-') << "\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(static_cast<int>(w0)) << r[0] << " | " << std::setw(static_cast<int>(w1))
              << r[1] << " | " << r[2] << "\n";
  }
}

template <FieldElement F>
int cmd_table_over(unsigned n, const typename F::Field& base, const Options& opt) {
  auto fam = family<F>(n, base);
  render_table(fam, delta_table(fam), opt);
  return kOk;
}

int cmd_table(unsigned n, const Options& opt) {
  const unsigned long ch = opt.single_char();
  if (ch == 0) return cmd_table_over<Rational>(n, RationalField{}, opt);
  return cmd_table_over<Fp>(n, PrimeField(ch), opt);
}

int cmd_verify(bool all, std::vector<unsigned> ns, const Options& opt) {
  if (all) ns = supported_n();
  if (ns.empty()) fail(ErrorCode::InvalidArgument, "verify needs --all or a list of N");
  std::vector<unsigned long> chars = opt.chars.empty() ? std::vector<unsigned long>{0} : opt.chars;
  const bool skip = all || chars.size() > 1;
  auto report = verify_all(ns, chars, skip);
  if (opt.json()) {
    print_json(report_json(report));
  } else {
    std::size_t matched = 0, mismatched = 0, skipped = 0;
    for (const auto& r : report.families) {
      std::cout << "N=" << std::setw(2) << r.n << "  char " << std::setw(3) << r.characteristic.get_str() << "  "
                << to_string(r.status);
      switch (r.status) {
        case VerifyStatus::Matched:
          ++matched;
          std::cout << " (" << r.entries_checked << " entries, " << std::fixed << std::setprecision(3) << r.seconds
                    << " s)\n";
          break;
        case VerifyStatus::Skipped:
          ++skipped;
          std::cout << " (" << r.reason << ")\n";
          break;
        case VerifyStatus::Mismatched:
          ++mismatched;
          std::cout << "\n";
          for (const auto& m : r.mismatches) {
            std::cout << "    " << m.what << " " << m.n << "P: computed " << m.computed << ", fixture " << m.fixture
                      << "\n";
          }
          break;
      }
    }
    std::cout << matched << " matched, " << mismatched << " mismatched, " << skipped << " skipped\n";
  }
  return report.ok() ? kOk : kMismatch;
}

int cmd_specialize(unsigned n, const std::string& la, const Options& opt) {
  opt.require_q("specialize");
  auto s = specialize(n, Rational::parse(la));
  if (opt.json()) {
    print_json(specialization_json(s));
  } else {
    const auto& c = *s.curve;
    std::cout << "N = " << n << ", la = " << s.lambda.to_string() << "\n"
              << "curve: [a1, a2, a3, a4, a6] = [" << c.a1().to_string() << ", " << c.a2().to_string() << ", "
              << c.a3().to_string() << ", " << c.a4().to_string() << ", " << c.a6().to_string() << "]\n"
              << "P = (" << s.p.x().to_string() << ", " << s.p.y().to_string() << ")\n"
              << "disc = " << c.discriminant().to_string() << "\n"
              << "j = " << c.j_invariant().to_string() << "\n";
  }
  return kOk;
}

std::vector<Place> parse_places(const std::vector<std::string>& primes, bool real) {
  std::vector<Place> places;
  for (const auto& p : primes) places.push_back(Place::finite(Integer(p)));
  if (real) places.push_back(Place::real());
  return places;
}

int cmd_choose_lambda(unsigned n, const std::vector<std::string>& primes, bool real, std::size_t budget,
                      const Options& opt) {
  opt.require_q("choose-lambda");
  auto cert = choose_lambda(n, parse_places(primes, real), budget);
  if (opt.json()) {
    print_json(certificate_json(cert));
  } else {
    std::cout << "N = " << n << ", la = " << cert.lambda.to_string() << "\n"
              << "delta(P)(la) = " << cert.delta_value.to_string() << "\n";
    for (const auto& c : cert.conditions) {
      std::cout << "  " << c.place.to_string() << ": ";
      if (c.valuation) std::cout << "valuation " << *c.valuation;
      if (c.sign) std::cout << "sign " << *c.sign;
      std::cout << (c.satisfied ? "  ok" : "  violated") << "\n";
    }
  }
  return kOk;
}

int cmd_hilbert(const std::string& a_text, const std::string& b_text, const Options& opt) {
  opt.require_q("hilbert");
  const Rational a = Rational::parse(a_text), b = Rational::parse(b_text);
  auto q = quaternion_is_split(a, b);
  if (opt.json()) {
    print_json(quaternion_json(a, b, q));
  } else {
    std::cout << "[" << a.to_string() << ", " << b.to_string() << "] is " << (q.split ? "split" : "nonsplit");
    if (!q.split) {
      std::cout << ", ramified at";
      for (const auto& v : q.ramification) std::cout << " " << v.to_string();
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_dump_fixtures(const Options&) {
  print_json(fixtures_json());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kummer coboundary tables for torsion families of elliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--char", opt.chars, "characteristic of the coefficient field (0 = Q); repeatable for verify")
      ->delimiter(',');

  unsigned table_n = 0;
  auto* table = app.add_subcommand("table", "print the delta table for one N");
  table->add_option("N", table_n)->required();

  bool verify_all_flag = false;
  std::vector<unsigned> verify_ns;
  auto* verify = app.add_subcommand("verify", "compare computed tables with the embedded fixtures");
  verify->add_flag("--all", verify_all_flag, "every supported N");
  verify->add_option("N", verify_ns);

  unsigned spec_n = 0;
  std::string spec_la;
  auto* spec = app.add_subcommand("specialize", "specialize a family at la = la0 over Q");
  spec->add_option("N", spec_n)->required();
  spec->add_option("la0", spec_la)->required();

  unsigned choose_n = 0;
  std::vector<std::string> primes;
  bool real = false;
  std::size_t budget = 1000;
  auto* choose = app.add_subcommand("choose-lambda", "find la0 meeting place conditions on delta(P)");
  choose->add_option("N", choose_n)->required();
  choose->add_option("--primes", primes, "finite places")->delimiter(',');
  choose->add_flag("--real", real, "require delta(P)(la0) < 0");
  choose->add_option("--budget", budget, "candidate budget");

  std::string ha, hb;
  auto* hilbert = app.add_subcommand("hilbert", "ramification of the quaternion algebra [a, b] over Q");
  hilbert->add_option("a", ha)->required();
  hilbert->add_option("b", hb)->required();

  auto* dump = app.add_subcommand("dump-fixtures", "print the embedded fixtures as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_n, opt);
    if (verify->parsed()) return cmd_verify(verify_all_flag, verify_ns, opt);
    if (spec->parsed()) return cmd_specialize(spec_n, spec_la, opt);
    if (choose->parsed()) return cmd_choose_lambda(choose_n, primes, real, budget, opt);
    if (hilbert->parsed()) return cmd_hilbert(ha, hb, opt);
    if (dump->parsed()) return cmd_dump_fixtures(opt);
  } catch (const Error& e) {
    if (opt.json()) {
      print_json(error_json(e));
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
  }
  return kUsage;
}
