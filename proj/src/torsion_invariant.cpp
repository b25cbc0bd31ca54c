#include "tq/torsion_invariant.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "tq/errors.hpp"

namespace tq {

HomRep delta1_term(const PrimeLocalData& local) {
  const Rational index = frac(local.decomposition.order(), local.inertia.order());
  return HomRep::from_function([&](const GaloisChar& chi) {
    return Rational(rational_pow(index, -fixed_dim(chi, local.decomposition)) * frob_det_quotient(chi, local));
  });
}

HomRep ts_representative(const FieldData& f, const std::set<long>& s, bool relabel_frobenius) {
  HomRep out;
  for (long p : s) {
    auto local = local_galois(f, p, relabel_frobenius);
    out = out * HomRep::from_function([&](const GaloisChar& chi) { return euler_factor(chi, local); }).inverse();
  }
  return out;
}

std::string to_string(ResolventStatus s) {
  switch (s) {
    case ResolventStatus::Passed: return "passed";
    case ResolventStatus::Failed: return "failed";
    case ResolventStatus::Unsupported: return "unsupported";
    case ResolventStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

ResolventCheck resolvent_factor_check(const FieldData& f) {
  ResolventCheck out;
  auto at2 = local_galois(f, 2);
  if (!at2.ramified()) {
    out.detail = "2 is unramified";
    return out;
  }
  // Any 2-ramified subfield generates the completion when 2 is admissible.
  long d = 0;
  for (auto c : {CharLabel::Chi1, CharLabel::Chi2, CharLabel::Chi1Chi2}) {
    long dc = f.subfield_d(c);
    if (((dc % 4) + 4) % 4 != 1) {
      d = dc;
      break;
    }
  }
  if (at2.decomposition.order() > 2) {
    out.status = ResolventStatus::Unsupported;
    out.detail = "decomposition at 2 is all of V4";
    return out;
  }
  long u = ((d / 2) % 8 + 8) % 8;
  if (d % 2 != 0 || (u != 1 && u != 5)) {
    out.status = ResolventStatus::Unsupported;
    out.detail = "E_w = Q_2(sqrt " + std::to_string(d) + ") is not Q_2(sqrt 2) or Q_2(sqrt 10)";
    return out;
  }
  Rational pi_sq = u == 1 ? 2 : 10;

  Integer prod = 1;
  for (const auto& chi : characters(FiniteGroupId::V4)) prod *= artin_conductor(chi, f);
  Integer root = sqrt(prod);
  if (root * root != prod) throw ContractViolation("conductor product " + prod.get_str() + " is not a square");

  Rational r = Rational(root) / (Rational(4096) * pi_sq);
  out.value = r;
  out.pi_squared = pi_sq;
  out.status = odd_part_mod4(r).is_trivial() ? ResolventStatus::Passed : ResolventStatus::Failed;
  out.detail = "odd part of " + to_string(r) + " is " + std::to_string(odd_part_mod4(r).value()) + " mod 4";
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Vanishes: return "vanishes";
    case Verdict::Nonzero: return "nonzero";
    case Verdict::Inadmissible: return "inadmissible";
  }
  return "unknown";
}

bool admissible(const FieldData& f) { return local_galois(f, 2).decomposition.order() <= 2; }

InvariantReport omega_loc_torsion(long d1, long d2, const InvariantOptions& options) {
  options.lattice.validate();
  InvariantReport rep;
  rep.field = field_data(d1, d2, options.allow_imaginary);
  if (!rep.field.totally_real) rep.note = "outside the totally real hypothesis";
  rep.s_f = ramified_set(rep.field);
  for (long p : options.extra_s) {
    if (p == 2 || !is_prime(p)) throw InputError("extra S primes must be odd primes, got " + std::to_string(p));
    rep.s_f.insert(p);
  }

  for (long p : rep.s_f) {
    PrimeEntry e;
    e.local = local_galois(rep.field, p, options.relabel_frobenius);
    e.delta1 = delta1_term(e.local);
    for (const auto& chi : characters(FiniteGroupId::V4))
      e.euler_factors[static_cast<int>(chi.label())] = euler_factor(chi, e.local);
    rep.per_prime.emplace(p, std::move(e));
  }

  if (!admissible(rep.field)) {
    rep.verdict = Verdict::Inadmissible;
    rep.note = "decomposition group at 2 is all of Gal(E/Q)";
    return rep;
  }

  rep.ts_rep = ts_representative(rep.field, rep.s_f, options.relabel_frobenius);
  for (auto& [p, e] : rep.per_prime) {
    rep.delta1_product = rep.delta1_product * e.delta1;
    if (p == 2 || !e.local.full_decomposition()) continue;
    e.local_term = options.route == LocalRoute::ClosedForm ? local_term_closed_form(e.local, options.lattice)
                                                           : local_term_via_complex(e.local, options.lattice);
    rep.local_product = rep.local_product * *e.local_term;
  }
  rep.delta1_torsion = torsion_class(rep.delta1_product);
  rep.resolvent = resolvent_factor_check(rep.field);

  rep.total = rep.ts_rep * rep.local_product.inverse() * rep.delta1_product;
  rep.torsion = torsion_class(*rep.total);
  rep.verdict = rep.torsion->is_trivial() ? Verdict::Vanishes : Verdict::Nonzero;
  return rep;
}

SweepSummary sweep(long dmax, const InvariantOptions& options, unsigned threads) {
  if (dmax < 3) throw InputError("sweep needs dmax >= 3");
  std::vector<std::pair<long, long>> pairs;
  for (long d2 = 3; d2 <= dmax; ++d2) {
    if (!is_squarefree(d2)) continue;
    for (long d1 = 2; d1 < d2; ++d1)
      if (is_squarefree(d1)) pairs.emplace_back(d1, d2);
  }

  std::vector<InvariantReport> reports(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++)
      reports[k] = omega_loc_torsion(pairs[k].first, pairs[k].second, options);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  SweepSummary s;
  s.dmax = dmax;
  s.fields = static_cast<long>(reports.size());
  for (const auto& r : reports) {
    std::pair<long, long> key{r.field.d1, r.field.d2};
    switch (r.verdict) {
      case Verdict::Vanishes: ++s.vanishes; break;
      case Verdict::Nonzero:
        ++s.nonzero;
        s.nonzero_fields.push_back(key);
        break;
      case Verdict::Inadmissible: ++s.inadmissible; break;
    }
    if (r.verdict != Verdict::Inadmissible && !r.delta1_torsion.is_trivial()) s.delta1_nontrivial.push_back(key);
  }
  s.reports = std::move(reports);
  return s;
}

nlohmann::json to_json(const ResolventCheck& r) {
  nlohmann::json j = {{"status", to_string(r.status)}, {"detail", r.detail}};
  j["value"] = r.value ? nlohmann::json(to_string(*r.value)) : nlohmann::json(nullptr);
  j["pi_squared"] = r.pi_squared ? nlohmann::json(to_string(*r.pi_squared)) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["field"] = to_json(r.field);
  j["s_f"] = r.s_f;
  nlohmann::json per = nlohmann::json::object();
  nlohmann::json delta1 = nlohmann::json::object();
  nlohmann::json local = nlohmann::json::object();
  for (const auto& [p, e] : r.per_prime) {
    auto key = std::to_string(p);
    nlohmann::json entry = to_json(e.local);
    nlohmann::json euler = nlohmann::json::object();
    for (auto c : kCharLabels) euler[to_string(c)] = to_string(e.euler_factors[static_cast<int>(c)]);
    entry["euler_factors"] = euler;
    entry["delta1"] = to_json(e.delta1);
    if (e.local_term) {
      entry["local_term"] = to_json(*e.local_term);
      local[key] = to_json(*e.local_term);
    }
    per[key] = entry;
    delta1[key] = to_json(e.delta1);
  }
  j["per_prime"] = per;
  bool ok = r.verdict != Verdict::Inadmissible;
  j["ts_rep"] = ok ? to_json(r.ts_rep) : nlohmann::json(nullptr);
  j["delta1"] = delta1;
  j["local_terms"] = local;
  j["resolvent_check"] = ok ? to_json(r.resolvent) : nlohmann::json(nullptr);
  j["torsion"] = r.torsion ? nlohmann::json(r.torsion->value()) : nlohmann::json(nullptr);
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const SweepSummary& s, bool include_reports) {
  nlohmann::json j = {{"dmax", s.dmax},
                      {"fields", s.fields},
                      {"vanishes", s.vanishes},
                      {"nonzero", s.nonzero},
                      {"inadmissible", s.inadmissible},
                      {"nonzero_fields", s.nonzero_fields},
                      {"delta1_nontrivial", s.delta1_nontrivial}};
  if (include_reports) {
    j["reports"] = nlohmann::json::array();
    for (const auto& r : s.reports) j["reports"].push_back(to_json(r));
  }
  return j;
}

}  // namespace tq
