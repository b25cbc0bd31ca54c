#include "tq/biquadratic.hpp"

#include <cstdlib>

#include "tq/errors.hpp"

namespace tq {

int kronecker(long d, long n) {
  if (n <= 0) throw InputError("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    long r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d / n) for odd n.
  long a = ((d % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  n = std::labs(n);
  for (long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

long squarefree_kernel(long n) {
  if (n == 0) throw DomainError("squarefree kernel of zero");
  long sign = n < 0 ? -1 : 1;
  long m = std::labs(n);
  long out = 1;
  for (long q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e % 2) out *= q;
  }
  return sign * out * m;
}

namespace {

long quadratic_disc(long d) {
  long r = ((d % 4) + 4) % 4;
  return r == 1 ? d : 4 * d;
}

int slot(CharLabel c) {
  if (c == CharLabel::One) throw DomainError("the trivial character has no quadratic subfield");
  return static_cast<int>(c) - 1;
}

}  // namespace

long FieldData::subfield_d(CharLabel c) const {
  switch (c) {
    case CharLabel::Chi1: return d1;
    case CharLabel::Chi2: return d2;
    case CharLabel::Chi1Chi2: return d3;
    default: return slot(c);
  }
}

long FieldData::subfield_disc(CharLabel c) const { return subfield_discs[slot(c)]; }

CharLabel FieldData::char_of_subfield(long d) const {
  if (d == d1) return CharLabel::Chi1;
  if (d == d2) return CharLabel::Chi2;
  if (d == d3) return CharLabel::Chi1Chi2;
  throw InputError("Q(sqrt " + std::to_string(d) + ") is not a subfield");
}

FieldData field_data(long d1, long d2, bool allow_imaginary) {
  for (long d : {d1, d2}) {
    if (d == 0 || d == 1) throw InputError("d must differ from 0 and 1, got " + std::to_string(d));
    if (!is_squarefree(d)) throw InputError(std::to_string(d) + " is not squarefree");
    if (d < 0 && !allow_imaginary)
      throw InputError("negative d = " + std::to_string(d) + " gives a field that is not totally real");
  }
  if (d1 == d2) throw InputError("d1 and d2 must be distinct");
  FieldData f;
  f.d1 = d1;
  f.d2 = d2;
  f.d3 = squarefree_kernel(d1 * d2);
  if (f.d3 == 1) throw InputError("d1 * d2 is a square; the field is not biquadratic");
  f.subfield_discs = {quadratic_disc(f.d1), quadratic_disc(f.d2), quadratic_disc(f.d3)};
  f.totally_real = d1 > 0 && d2 > 0;
  return f;
}

namespace {

bool ramifies(long d, long p) {
  if (p == 2) return ((d % 4) + 4) % 4 != 1;
  return d % p == 0;
}

// Frobenius sign in an unramified quadratic subfield.
int splitting_sign(long d, long p) {
  if (p == 2) return ((d % 8) + 8) % 8 == 1 ? 1 : -1;
  return kronecker(d, p);
}

GroupElement element_with_values(int on_chi1, int on_chi2) {
  // chi1(a^i b^j) = (-1)^i and chi2(a^i b^j) = (-1)^j.
  return GroupElement::v4(on_chi1 < 0 ? 1 : 0, on_chi2 < 0 ? 1 : 0);
}

}  // namespace

PrimeLocalData local_galois(const FieldData& f, long p, bool relabel_frobenius) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  PrimeLocalData out;
  out.p = p;
  std::array<bool, 3> ram{};
  int unramified = 0;
  for (int k = 0; k < 3; ++k) {
    ram[k] = ramifies(f.subfield_d(static_cast<CharLabel>(k + 1)), p);
    if (!ram[k]) ++unramified;
  }
  out.in_s = unramified < 3;

  if (unramified == 0) {
    out.inertia = Subgroup::whole();
    out.decomposition = Subgroup::whole();
    out.frob = GroupElement::identity(FiniteGroupId::V4);
    return out;
  }

  if (unramified == 3) {
    out.inertia = Subgroup::trivial();
    out.frob = element_with_values(splitting_sign(f.d1, p), splitting_sign(f.d2, p));
    out.decomposition = Subgroup::generated_by(out.frob);
    return out;
  }

  int u = 0;
  while (ram[u]) ++u;
  GaloisChar chi_u(FiniteGroupId::V4, static_cast<CharLabel>(u + 1));
  int sign = splitting_sign(f.subfield_d(chi_u.label()), p);

  std::vector<GroupElement> coset;
  for (const auto& g : elements(FiniteGroupId::V4)) {
    if (chi_u(g) != sign) continue;
    coset.push_back(g);
  }
  for (const auto& g : elements(FiniteGroupId::V4)) {
    if (!g.is_identity() && chi_u(g) == 1) {
      out.inertia = Subgroup::generated_by(g);
      break;
    }
  }
  out.frob = coset[relabel_frobenius ? 1 : 0];
  out.decomposition = Subgroup::generated_by(out.inertia.generator(), out.frob);
  if (out.full_decomposition()) {
    out.a_p = out.inertia.generator();
    out.b_p = out.frob;
  }
  return out;
}

std::set<long> ramified_set(const FieldData& f) {
  std::set<long> s;
  for (long disc : f.subfield_discs)
    for (long q : prime_factors(disc)) s.insert(q);
  return s;
}

int fixed_dim(const GaloisChar& chi, const Subgroup& h) { return h.char_trivial_on(chi) ? 1 : 0; }

Rational euler_factor(const GaloisChar& chi, const PrimeLocalData& local) {
  if (!local.inertia.char_trivial_on(chi)) return 1;
  return 1 - frac(chi(local.frob), local.p);
}

Rational frob_det_quotient(const GaloisChar& chi, const PrimeLocalData& local) {
  if (fixed_dim(chi, local.inertia) - fixed_dim(chi, local.decomposition) == 0) return 1;
  return 1 - chi(local.frob);
}

long artin_conductor(const GaloisChar& chi, const FieldData& f) {
  if (chi.is_trivial()) return 1;
  return std::labs(f.subfield_disc(chi.label()));
}

nlohmann::json to_json(const FieldData& f) {
  return {{"d1", f.d1},
          {"d2", f.d2},
          {"d3", f.d3},
          {"subfield_discs", {{"chi1", f.subfield_discs[0]}, {"chi2", f.subfield_discs[1]}, {"chi1chi2", f.subfield_discs[2]}}},
          {"totally_real", f.totally_real}};
}

nlohmann::json to_json(const PrimeLocalData& l) {
  nlohmann::json j = {{"p", l.p},
                      {"in_s", l.in_s},
                      {"inertia", to_string(l.inertia)},
                      {"decomposition", to_string(l.decomposition)},
                      {"frob", to_string(l.frob)}};
  if (l.a_p) j["a_p"] = to_string(*l.a_p);
  if (l.b_p) j["b_p"] = to_string(*l.b_p);
  return j;
}

}  // namespace tq
