#pragma once

#include <string>
#include <vector>

#include "tq/biquadratic.hpp"
#include "tq/perfect_complex.hpp"
#include "tq/relk0.hpp"

namespace tq {

/// Tame ramified prime p with full decomposition group: `a` generates
/// inertia, `b` acts as Frobenius.
struct TameComplexSpec {
  long p = 3;
  GroupElement a = GroupElement::v4(1, 0);
  GroupElement b = GroupElement::v4(0, 1);

  /// Throws InputError unless p is an odd prime, a != e and b not in {e, a}.
  void validate() const;
};

/// The lattice p^m O = L at w, and the sign of the exponent 1 ± m dim chi^I.
struct LatticeExponent {
  long m = 1;
  int sign = 1;

  void validate() const;
};

/// x = (p+1)/2 + ((p-1)/2) a, the generator of the resolution
/// 0 -> Z[G] -x-> Z[G] -> F_{p^2} -> 0.
GroupRingElem residue_generator(long p, const GroupElement& a);

/// Degrees -2, -1, 0 with ranks 1, 2, 1 (generators w; z1, z2; t):
///   d_{-2}(w) = (b x - 1) z1 - (a - 1) z2,
///   d_{-1}(z1) = -(a - 1) t, d_{-1}(z2) = -(b - 1) t.
PerfectComplex build_tame_complex(const TameComplexSpec& spec);

/// At the trivial character, the class of T = (1 + b) z2 - (1 + a) z1 in
/// H^{-1} goes to the class of t in H^0 with matrix (1); the other
/// characters have no rational cohomology.
CohomologyIso valuation_iso(const TameComplexSpec& spec, IsoDirection direction = IsoDirection::OddToEven);

/// chi -> chi(x): p where chi(a) = 1, otherwise 1.
HomRep residue_class(long p, const GroupElement& a);

struct ResolutionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ResolutionReport {
  long p = 0;
  std::vector<ResolutionCheck> checks;

  bool passed() const;
};

/// Exact checks in Q[V4] on the resolution of F_{p^2}: x - a x = 1 - a,
/// x acts as p on (1 + a) and as 1 on (1 - a), multiplication by x has
/// determinant p^2 = |F_{p^2}|, and chi(x) is p or 1 as chi(a) is 1 or -1.
ResolutionReport verify_residue_resolution(long p, const GroupElement& a = GroupElement::v4(1, 0));

/// (-1)^{dim chi^I - dim chi^{G_w}}.
int epsilon(const GaloisChar& chi, const PrimeLocalData& local);

/// Product of epsilon over the four characters.
int epsilon_product(const PrimeLocalData& local);

/// chi -> eps(chi) (|G|/|I|)^{-dim chi^G} det(1 - Frob^{-1} | chi^I/chi^G)
///        / (p^{1 ± m dim chi^I} det(1 - p^{-1} Frob^{-1} | chi^I)).
/// Throws ContractViolation unless p is odd with full decomposition group.
HomRep local_term_closed_form(const PrimeLocalData& local, const LatticeExponent& lat);

/// The class of the tame complex with the valuation isomorphism, times the
/// residue correction chi -> p^{m dim chi^I ± 1}.
HomRep local_term_via_complex(const PrimeLocalData& local, const LatticeExponent& lat,
                              const SplittingChoice& splitting = SplittingChoice::canonical());

}  // namespace tq
