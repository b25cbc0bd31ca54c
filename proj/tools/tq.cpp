#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <set>

#include "tq/analytic.hpp"
#include "tq/torsion_invariant.hpp"
#include "tq/errors.hpp"
#include "tq/local_terms.hpp"

namespace {

constexpr int kExitVanishes = 0;
constexpr int kExitInadmissible = 2;
constexpr int kExitNonzero = 3;
constexpr int kExitInputError = 4;

int exit_code(tq::Verdict v) {
  switch (v) {
    case tq::Verdict::Vanishes: return kExitVanishes;
    case tq::Verdict::Inadmissible: return kExitInadmissible;
    case tq::Verdict::Nonzero: return kExitNonzero;
  }
  return kExitInputError;
}

void print_report(const tq::InvariantReport& r) {
  std::cout << "E = Q(sqrt " << r.field.d1 << ", sqrt " << r.field.d2 << "), d3 = " << r.field.d3 << "\n";
  std::cout << "S_f = {";
  bool first = true;
  for (long p : r.s_f) {
    std::cout << (first ? "" : ", ") << p;
    first = false;
  }
  std::cout << "}\n";
  for (const auto& [p, e] : r.per_prime) {
    std::cout << "  p = " << p << ": inertia " << tq::to_string(e.local.inertia) << ", decomposition "
              << tq::to_string(e.local.decomposition) << ", frob " << tq::to_string(e.local.frob)
              << ", delta1 " << tq::to_string(e.delta1);
    if (e.local_term) std::cout << ", local term " << tq::to_string(*e.local_term);
    std::cout << "\n";
  }
  if (r.verdict != tq::Verdict::Inadmissible) {
    std::cout << "T_S representative " << tq::to_string(r.ts_rep) << "\n";
    std::cout << "resolvent check: " << tq::to_string(r.resolvent.status);
    if (!r.resolvent.detail.empty()) std::cout << " (" << r.resolvent.detail << ")";
    std::cout << "\n";
    std::cout << "torsion " << r.torsion->value() << "\n";
  }
  std::cout << "verdict " << tq::to_string(r.verdict);
  if (!r.note.empty()) std::cout << " (" << r.note << ")";
  std::cout << "\n";
}

int run_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  using tq::HomRep;
  using tq::Rational;

  check("torsion_class(3, 1, 1, 1) = 3", tq::torsion_class(HomRep(3, 1, 1, 1)).value() == 3);
  for (long p : {3L, 5L}) {
    tq::TameComplexSpec spec{p};
    auto h = tq::class_representative(tq::build_tame_complex(spec), tq::valuation_iso(spec));
    HomRep want(tq::frac(1, 2 * p - 2), -1, tq::frac(-2, p + 1), -1);
    check("tame complex determinants at p = " + std::to_string(p), h == want);
  }
  check("residue identity x - a x = 1 - a at p = 5", tq::verify_residue_resolution(5).passed());
  check("residue_class(5) = (5, 1, 5, 1)", tq::residue_class(5, tq::GroupElement::v4(1, 0)) == HomRep(5, 1, 5, 1));
  check("induce from the trivial subgroup has torsion 1",
        tq::induce_from_subgroup(tq::Subgroup::trivial(), {3, 1}).second.is_trivial());
  auto f = tq::field_data(2, 17);
  auto r = tq::resolvent_factor_check(f);
  check("resolvent value 17/1024 for (2, 17)", r.value && *r.value == tq::frac(17, 1024));
  check("L-value ratio for the trivial character is 4",
        tq::l_ratio_squared_exact(tq::GaloisChar(tq::FiniteGroupId::V4, tq::CharLabel::One), f) == 4);
  check("L-value ratio for chi_5 is 4/5",
        tq::l_ratio_squared_exact(tq::GaloisChar(tq::FiniteGroupId::V4, tq::CharLabel::Chi1), tq::field_data(5, 13)) ==
            tq::frac(4, 5));
  std::cout << (failures ? "selftest failed" : "selftest passed") << "\n";
  return failures ? 1 : 0;
}

int run_l_ratio(long conductor_max, double tol) {
  std::set<long> seen;
  int failures = 0;
  for (long d = 2; d <= conductor_max; ++d) {
    if (!tq::is_squarefree(d)) continue;
    long disc = ((d % 4) == 1) ? d : 4 * d;
    if (disc > conductor_max || !seen.insert(disc).second) continue;
    // A field containing Q(sqrt d) as its first subfield.
    long other = d == 2 ? 3 : 2;
    auto f = tq::field_data(d, other);
    auto c = tq::l_ratio_numeric_check(tq::GaloisChar(tq::FiniteGroupId::V4, tq::CharLabel::Chi1), f, tol);
    std::printf("%s f = %3ld ratio = %.12f ratio^2 = %.12f 4/f = %.12f err = %.3e\n", c.passed ? "PASS" : "FAIL",
                c.conductor, c.lhs_numeric, c.lhs_numeric * c.lhs_numeric, c.rhs_exact_squared.get_d(),
                c.abs_error_squared);
    if (!c.passed) ++failures;
  }
  return failures ? 1 : 0;
}

std::vector<long> parse_prime_list(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    auto item = text.substr(start, end - start);
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw tq::InputError("cannot parse prime '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of the local equivariant Tamagawa invariant for biquadratic fields"};
  app.require_subcommand(1);

  long d1 = 0, d2 = 0, m = 1;
  bool json = false, allow_imaginary = false;
  std::string sign = "plus", extra;
  auto* compute = app.add_subcommand("compute", "Torsion class and verdict for Q(sqrt d1, sqrt d2)");
  compute->add_option("--d1", d1, "first squarefree integer")->required();
  compute->add_option("--d2", d2, "second squarefree integer")->required();
  compute->add_flag("--json", json, "emit the JSON report");
  compute->add_option("--m", m, "lattice exponent m >= 1")->capture_default_str();
  compute->add_option("--sign", sign, "sign of the lattice exponent")->check(CLI::IsMember({"plus", "minus"}));
  compute->add_option("--extra-s", extra, "comma-separated odd primes added to S");
  compute->add_flag("--allow-imaginary", allow_imaginary, "accept negative d");

  long dmax = 20;
  bool sweep_json = false;
  unsigned threads = 1;
  auto* sweep = app.add_subcommand("sweep", "Run every squarefree pair 1 < d1 < d2 <= max");
  sweep->add_option("--max", dmax, "largest d")->required();
  sweep->add_flag("--json", sweep_json, "emit the JSON summary");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Check the worked examples");

  long conductor_max = 60;
  double tol = 1e-8;
  auto* l_ratio = app.add_subcommand("l-ratio", "Numeric check of L(1)/L'(0) against 2 f^{-1/2}");
  l_ratio->add_option("--conductor-max", conductor_max, "largest conductor")->capture_default_str();
  l_ratio->add_option("--tol", tol, "tolerance on the squared ratio")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*compute) {
      tq::InvariantOptions opts;
      opts.lattice = {m, sign == "plus" ? 1 : -1};
      opts.allow_imaginary = allow_imaginary;
      if (!extra.empty()) opts.extra_s = parse_prime_list(extra);
      auto report = tq::omega_loc_torsion(d1, d2, opts);
      if (json)
        std::cout << tq::to_json(report).dump(2) << "\n";
      else
        print_report(report);
      return exit_code(report.verdict);
    }
    if (*sweep) {
      auto s = tq::sweep(dmax, {}, threads);
      if (sweep_json) {
        std::cout << tq::to_json(s).dump(2) << "\n";
      } else {
        std::cout << "fields " << s.fields << ", vanishes " << s.vanishes << ", nonzero " << s.nonzero
                  << ", inadmissible " << s.inadmissible << "\n";
        if (s.nonzero) {
          std::cout << "NONZERO torsion at:";
          for (auto [a, b] : s.nonzero_fields) std::cout << " (" << a << "," << b << ")";
          std::cout << "\n";
        }
      }
      return s.nonzero ? kExitNonzero : kExitVanishes;
    }
    if (*selftest) return run_selftest();
    if (*l_ratio) return run_l_ratio(conductor_max, tol);
  } catch (const tq::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
