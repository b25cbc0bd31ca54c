#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "tq/group_ring.hpp"
#include "tq/relk0.hpp"

namespace tq {

/// Kronecker symbol (d / n) for n > 0.
int kronecker(long d, long n);

bool is_squarefree(long n);
bool is_prime(long n);
/// Squarefree kernel, keeping the sign.
long squarefree_kernel(long n);
/// Distinct prime factors of |n| in ascending order.
std::vector<long> prime_factors(long n);

/// E = Q(sqrt d1, sqrt d2) with Gal(E/Q) = V4 = {e, a, b, ab}: a negates
/// sqrt d1 and fixes sqrt d2, b fixes sqrt d1 and negates sqrt d2. Hence
/// chi1 <-> Q(sqrt d1), chi2 <-> Q(sqrt d2), chi1chi2 <-> Q(sqrt d3).
struct FieldData {
  long d1 = 0, d2 = 0, d3 = 0;
  std::array<long, 3> subfield_discs{};  // indexed like chi1, chi2, chi1chi2
  bool totally_real = true;

  /// d of the quadratic subfield cut out by a nontrivial character.
  long subfield_d(CharLabel c) const;
  long subfield_disc(CharLabel c) const;
  /// The nontrivial character whose subfield is Q(sqrt d), for d in {d1, d2, d3}.
  CharLabel char_of_subfield(long d) const;
};

/// Throws InputError for non-squarefree, degenerate, or (without
/// allow_imaginary) negative input.
FieldData field_data(long d1, long d2, bool allow_imaginary = false);

struct PrimeLocalData {
  long p = 0;
  bool in_s = true;
  Subgroup inertia;
  Subgroup decomposition;
  GroupElement frob;  // coset representative of Frobenius modulo inertia
  /// Set when decomposition is all of V4.
  std::optional<GroupElement> a_p, b_p;

  bool full_decomposition() const { return decomposition.order() == 4; }
  bool ramified() const { return inertia.order() > 1; }
};

/// Inertia, decomposition and Frobenius at p, read off from the splitting of
/// p in the three quadratic subfields. With relabel_frobenius the other
/// representative of the Frobenius coset is used at ramified primes.
PrimeLocalData local_galois(const FieldData& f, long p, bool relabel_frobenius = false);

/// Rational primes dividing disc(E).
std::set<long> ramified_set(const FieldData& f);

/// det(1 - p^{-1} Frob^{-1} | chi^I): 1 if chi is nontrivial on inertia,
/// otherwise 1 - chi(frob)/p.
Rational euler_factor(const GaloisChar& chi, const PrimeLocalData& local);

/// det(1 - Frob^{-1} | chi^I / chi^{G_w}).
Rational frob_det_quotient(const GaloisChar& chi, const PrimeLocalData& local);

/// dim chi^H for a one-dimensional chi.
int fixed_dim(const GaloisChar& chi, const Subgroup& h);

/// 1 for the trivial character, |disc Q(sqrt d)| for chi_d.
long artin_conductor(const GaloisChar& chi, const FieldData& f);

nlohmann::json to_json(const FieldData& f);
nlohmann::json to_json(const PrimeLocalData& l);

}  // namespace tq
