#include "tq/local_terms.hpp"

#include "tq/errors.hpp"

namespace tq {

void TameComplexSpec::validate() const {
  if (p < 3 || !is_prime(p)) throw InputError("tame complex needs an odd prime, got " + std::to_string(p));
  if (a.group != FiniteGroupId::V4 || b.group != FiniteGroupId::V4)
    throw UnsupportedGroupError("tame complex generators must lie in V4");
  if (a.is_identity()) throw InputError("inertia generator must be nontrivial");
  if (b.is_identity() || b == a) throw InputError("Frobenius lift must lie outside inertia");
}

void LatticeExponent::validate() const {
  if (m < 1) throw InputError("lattice exponent m must be >= 1");
  if (sign != 1 && sign != -1) throw InputError("lattice sign must be +1 or -1");
}

GroupRingElem residue_generator(long p, const GroupElement& a) {
  return GroupRingElem::scalar(FiniteGroupId::V4, frac(p + 1, 2)) + GroupRingElem::of(a, frac(p - 1, 2));
}

PerfectComplex build_tame_complex(const TameComplexSpec& spec) {
  spec.validate();
  const auto one = GroupRingElem::scalar(FiniteGroupId::V4, 1);
  const auto a = GroupRingElem::of(spec.a);
  const auto b = GroupRingElem::of(spec.b);

  GroupRingMatrix lambda(FiniteGroupId::V4, 2, 1);
  lambda.at(0, 0) = b * residue_generator(spec.p, spec.a) - one;
  lambda.at(1, 0) = -(a - one);

  GroupRingMatrix minus_phi(FiniteGroupId::V4, 1, 2);
  minus_phi.at(0, 0) = -(a - one);
  minus_phi.at(0, 1) = -(b - one);

  return PerfectComplex(-2, {1, 2, 1}, {lambda, minus_phi});
}

CohomologyIso valuation_iso(const TameComplexSpec& spec, IsoDirection direction) {
  spec.validate();
  CohomologyIso iso;
  for (auto c : kCharLabels) {
    auto& comp = iso[c];
    comp.direction = direction;
    comp.matrix = RationalMatrix(0, 0);
  }
  GaloisChar one(FiniteGroupId::V4, CharLabel::One);
  CocycleRep t_class{-1, {-apply_char(one, spec.a + 1), apply_char(one, spec.b + 1)}};
  CocycleRep t_gen{0, {Rational(1)}};
  auto& triv = iso[CharLabel::One];
  triv.matrix = RationalMatrix{{1}};
  if (direction == IsoDirection::OddToEven) {
    triv.source = {t_class};
    triv.target = {t_gen};
  } else {
    triv.source = {t_gen};
    triv.target = {t_class};
  }
  return iso;
}

HomRep residue_class(long p, const GroupElement& a) {
  const auto x = residue_generator(p, a);
  return HomRep::from_function([&](const GaloisChar& chi) { return apply_char(chi, x); });
}

bool ResolutionReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

namespace {

// Matrix of left multiplication by x on Q[V4] in the element basis.
RationalMatrix multiplication_matrix(const GroupRingElem& x) {
  const auto els = elements(FiniteGroupId::V4);
  RationalMatrix m(els.size(), els.size());
  for (std::size_t c = 0; c < els.size(); ++c) {
    const auto image = x * GroupRingElem::of(els[c]);
    for (std::size_t r = 0; r < els.size(); ++r) m(r, c) = image.coeff(els[r]);
  }
  return m;
}

}  // namespace

ResolutionReport verify_residue_resolution(long p, const GroupElement& a) {
  ResolutionReport report;
  report.p = p;
  if (p < 3 || !is_prime(p)) {
    report.checks.push_back({"odd prime", false, std::to_string(p) + " is not an odd prime"});
    return report;
  }
  if (a.group != FiniteGroupId::V4 || a.is_identity()) {
    report.checks.push_back({"inertia generator", false, "a must be a nontrivial element of V4"});
    return report;
  }
  const auto one = GroupRingElem::scalar(FiniteGroupId::V4, 1);
  const auto ga = GroupRingElem::of(a);
  const auto x = residue_generator(p, a);

  auto lhs = x - ga * x;
  report.checks.push_back({"x - a x = 1 - a", lhs == one - ga, to_string(lhs)});

  auto norm = one + ga;
  auto on_norm = x * norm;
  report.checks.push_back({"x (1 + a) = p (1 + a)", on_norm == norm * Rational(p), to_string(on_norm)});

  auto sign = one - ga;
  auto on_sign = x * sign;
  report.checks.push_back({"x (1 - a) = 1 - a", on_sign == sign, to_string(on_sign)});

  Rational det = determinant(multiplication_matrix(x));
  report.checks.push_back({"det(x) = p^2", det == Rational(p * p), to_string(det)});

  for (const auto& chi : characters(FiniteGroupId::V4)) {
    Rational v = apply_char(chi, x);
    Rational want = chi(a) == 1 ? Rational(p) : Rational(1);
    report.checks.push_back({"chi(x) for " + to_string(chi.label()), v == want, to_string(v)});
  }
  return report;
}

int epsilon(const GaloisChar& chi, const PrimeLocalData& local) {
  int d = fixed_dim(chi, local.inertia) - fixed_dim(chi, local.decomposition);
  return d % 2 ? -1 : 1;
}

int epsilon_product(const PrimeLocalData& local) {
  int e = 1;
  for (const auto& chi : characters(FiniteGroupId::V4)) e *= epsilon(chi, local);
  return e;
}

namespace {

void require_full_tame(const PrimeLocalData& local) {
  if (local.p == 2) throw ContractViolation("local terms are only modelled at odd primes");
  if (!local.full_decomposition() || local.inertia.order() != 2)
    throw ContractViolation("local term at " + std::to_string(local.p) + " needs a full decomposition group");
}

}  // namespace

HomRep local_term_closed_form(const PrimeLocalData& local, const LatticeExponent& lat) {
  require_full_tame(local);
  lat.validate();
  const Rational index = frac(local.decomposition.order(), local.inertia.order());
  return HomRep::from_function([&](const GaloisChar& chi) {
    int fixed_i = fixed_dim(chi, local.inertia);
    int fixed_g = fixed_dim(chi, local.decomposition);
    Rational num = epsilon(chi, local) * rational_pow(index, -fixed_g) * frob_det_quotient(chi, local);
    Rational den = rational_pow(Rational(local.p), 1 + lat.sign * lat.m * fixed_i) * euler_factor(chi, local);
    return Rational(num / den);
  });
}

HomRep local_term_via_complex(const PrimeLocalData& local, const LatticeExponent& lat,
                              const SplittingChoice& splitting) {
  require_full_tame(local);
  lat.validate();
  TameComplexSpec spec{local.p, *local.a_p, *local.b_p};
  HomRep cls = class_representative(build_tame_complex(spec), valuation_iso(spec), splitting);
  HomRep correction = HomRep::from_function([&](const GaloisChar& chi) {
    return rational_pow(Rational(local.p), lat.m * fixed_dim(chi, local.inertia) + lat.sign);
  });
  return cls * correction;
}

}  // namespace tq
