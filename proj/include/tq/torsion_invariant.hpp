#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tq/biquadratic.hpp"
#include "tq/local_terms.hpp"
#include "tq/relk0.hpp"

namespace tq {

/// chi -> (|G_w|/|I_w|)^{-dim chi^{G_w}} det(1 - Frob^{-1} | chi^I/chi^{G_w}).
HomRep delta1_term(const PrimeLocalData& local);

/// chi -> (prod_{p in S} det(1 - p^{-1} Frob^{-1} | chi^I))^{-1}.
HomRep ts_representative(const FieldData& f, const std::set<long>& s, bool relabel_frobenius = false);

enum class ResolventStatus { Passed, Failed, Unsupported, NotApplicable };
std::string to_string(ResolventStatus s);

struct ResolventCheck {
  ResolventStatus status = ResolventStatus::NotApplicable;
  std::optional<Rational> value;       // sqrt(prod f(chi)) / (8^4 pi^2)
  std::optional<Rational> pi_squared;  // 2 or 10
  std::string detail;
};

/// For E with 2 ramified and E_w = Q_2(sqrt 2) or Q_2(sqrt 10), computes
/// r = sqrt(prod_chi f(chi)) / (8^4 pi^2) from the resolvents (gamma | chi) =
/// 8 or 8 pi and checks that its odd part is 1 mod 4. NotApplicable when 2 is
/// unramified, Unsupported for any other completion at 2.
ResolventCheck resolvent_factor_check(const FieldData& f);

enum class LocalRoute { ClosedForm, ViaComplex };

struct InvariantOptions {
  std::vector<long> extra_s;  // odd primes added to S
  LatticeExponent lattice;
  bool allow_imaginary = false;
  bool relabel_frobenius = false;
  LocalRoute route = LocalRoute::ClosedForm;
};

enum class Verdict { Vanishes, Nonzero, Inadmissible };
std::string to_string(Verdict v);

struct PrimeEntry {
  PrimeLocalData local;
  HomRep delta1;
  std::array<Rational, 4> euler_factors;
  std::optional<HomRep> local_term;
};

struct InvariantReport {
  FieldData field;
  std::set<long> s_f;
  std::map<long, PrimeEntry> per_prime;
  HomRep ts_rep;
  HomRep delta1_product;
  TorsionClass delta1_torsion;
  HomRep local_product;  // product of the full-decomposition local terms
  ResolventCheck resolvent;
  std::optional<HomRep> total;
  std::optional<TorsionClass> torsion;
  Verdict verdict = Verdict::Inadmissible;
  std::string note;
};

/// Local data at 2 decide admissibility: |decomposition at 2| <= 2.
bool admissible(const FieldData& f);

/// Torsion class of ts_rep * prod_{full} local_term^{-1} * prod_S delta1.
/// Throws InputError for invalid fields or extra primes.
InvariantReport omega_loc_torsion(long d1, long d2, const InvariantOptions& options = {});

struct SweepSummary {
  long dmax = 0;
  long fields = 0;
  long vanishes = 0;
  long nonzero = 0;
  long inadmissible = 0;
  std::vector<std::pair<long, long>> nonzero_fields;
  std::vector<std::pair<long, long>> delta1_nontrivial;
  std::vector<InvariantReport> reports;  // sorted by (d1, d2)
};

/// All squarefree pairs 1 < d1 < d2 <= dmax. threads = 0 uses the hardware
/// concurrency.
SweepSummary sweep(long dmax, const InvariantOptions& options = {}, unsigned threads = 1);

nlohmann::json to_json(const ResolventCheck& r);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const SweepSummary& s, bool include_reports = false);

}  // namespace tq
