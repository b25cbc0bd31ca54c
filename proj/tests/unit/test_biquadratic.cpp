#include <doctest.h>

#include "tq/biquadratic.hpp"
#include "tq/errors.hpp"

using namespace tq;

namespace {

enum class Splitting { Split, Inert, Ramified };

// Behaviour of p in Q(sqrt d) by counting square roots of d modulo p (odd
// p) or modulo 8 (p = 2), without Kronecker symbols.
Splitting split_oracle(long d, long p) {
  if (p == 2) {
    long r = ((d % 8) + 8) % 8;
    if (r % 4 != 1) return Splitting::Ramified;
    return r == 1 ? Splitting::Split : Splitting::Inert;
  }
  long r = ((d % p) + p) % p;
  if (r == 0) return Splitting::Ramified;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == r) return Splitting::Split;
  return Splitting::Inert;
}

// Euler's criterion for odd prime p.
int legendre_oracle(long d, long p) {
  long r = ((d % p) + p) % p;
  if (r == 0) return 0;
  long acc = 1;
  for (long k = 0; k < (p - 1) / 2; ++k) acc = acc * r % p;
  return acc == 1 ? 1 : -1;
}

std::vector<long> small_primes(long limit) {
  std::vector<long> out;
  for (long p = 2; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::pair<long, long>> small_fields(long dmax) {
  std::vector<std::pair<long, long>> out;
  for (long d2 = 3; d2 <= dmax; ++d2)
    for (long d1 = 2; d1 < d2; ++d1)
      if (is_squarefree(d1) && is_squarefree(d2)) out.emplace_back(d1, d2);
  return out;
}

const std::array<CharLabel, 3> kNontrivial = {CharLabel::Chi1, CharLabel::Chi2, CharLabel::Chi1Chi2};

}  // namespace

TEST_CASE("kronecker agrees with Euler's criterion") {
  for (long p : small_primes(200)) {
    if (p == 2) continue;
    for (long d = -60; d <= 60; ++d) CHECK(kronecker(d, p) == legendre_oracle(d, p));
  }
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(17, 2) == 1);
  CHECK(kronecker(8, 2) == 0);
  CHECK(kronecker(2, 15) == 1);
  CHECK(kronecker(3, 1) == 1);
  CHECK_THROWS_AS(kronecker(3, 0), InputError);
}

TEST_CASE("squarefree helpers") {
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(0));
  CHECK(squarefree_kernel(5 * 65) == 13);
  CHECK(squarefree_kernel(-12) == -3);
  CHECK(prime_factors(136) == std::vector<long>{2, 17});
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("field_data examples") {
  auto f = field_data(5, 13);
  CHECK(f.d3 == 65);
  CHECK(f.subfield_discs == std::array<long, 3>{5, 13, 65});
  auto g = field_data(2, 17);
  CHECK(g.d3 == 34);
  CHECK(g.subfield_discs == std::array<long, 3>{8, 17, 136});
  CHECK(g.char_of_subfield(34) == CharLabel::Chi1Chi2);
  CHECK(field_data(6, 10).d3 == 15);
  CHECK(g.totally_real);

  CHECK_THROWS_AS(field_data(4, 3), InputError);
  CHECK_THROWS_AS(field_data(3, 3), InputError);
  CHECK_THROWS_AS(field_data(1, 3), InputError);
  CHECK_THROWS_AS(field_data(-1, 3), InputError);
  CHECK_NOTHROW(field_data(-1, 3, true));
  CHECK_FALSE(field_data(-1, 3, true).totally_real);
}

TEST_CASE("local_galois examples") {
  auto f = field_data(5, 13);
  auto l5 = local_galois(f, 5);
  GaloisChar chi13(FiniteGroupId::V4, f.char_of_subfield(13));
  CHECK(l5.inertia.order() == 2);
  CHECK(l5.inertia.char_trivial_on(chi13));
  CHECK(chi13(l5.frob) == -1);
  CHECK(l5.full_decomposition());
  REQUIRE(l5.a_p.has_value());
  CHECK(l5.inertia.contains(*l5.a_p));

  auto g = field_data(13, 17);
  auto l13 = local_galois(g, 13);
  GaloisChar chi17(FiniteGroupId::V4, g.char_of_subfield(17));
  CHECK(l13.inertia.char_trivial_on(chi17));
  CHECK(l13.inertia.contains(l13.frob));
  CHECK(l13.decomposition.order() == 2);
  CHECK_FALSE(l13.a_p.has_value());

  auto h = field_data(2, 5);
  auto l2 = local_galois(h, 2);
  GaloisChar chi5(FiniteGroupId::V4, h.char_of_subfield(5));
  CHECK(l2.inertia.char_trivial_on(chi5));
  CHECK(l2.decomposition == Subgroup::whole());

  // Every subfield ramified at 2: inertia is all of V4.
  auto l2b = local_galois(field_data(2, 3), 2);
  CHECK(l2b.inertia == Subgroup::whole());
  CHECK_FALSE(l2b.in_s == false);

  CHECK_THROWS_AS(local_galois(f, 9), InputError);
}

TEST_CASE("local_galois agrees with splitting in each quadratic subfield") {
  for (auto [d1, d2] : small_fields(40)) {
    auto f = field_data(d1, d2);
    for (long p : small_primes(60)) {
      for (bool relabel : {false, true}) {
        auto l = local_galois(f, p, relabel);
        CHECK(l.inertia.is_subgroup_of(l.decomposition));
        CHECK(l.decomposition.contains(l.frob));
        if (l.inertia.order() < 4)
          CHECK(Subgroup::generated_by(l.inertia.order() == 2 ? l.inertia.generator() : l.frob, l.frob) ==
                l.decomposition);
        for (auto c : kNontrivial) {
          GaloisChar chi(FiniteGroupId::V4, c);
          Splitting want = split_oracle(f.subfield_d(c), p);
          Splitting got = !l.inertia.char_trivial_on(chi)         ? Splitting::Ramified
                          : l.decomposition.char_trivial_on(chi) ? Splitting::Split
                                                                  : Splitting::Inert;
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("full decomposition at odd p forces ramification") {
  for (auto [d1, d2] : small_fields(60)) {
    auto f = field_data(d1, d2);
    auto s = ramified_set(f);
    for (long p : small_primes(80)) {
      if (p == 2) continue;
      auto l = local_galois(f, p);
      if (l.full_decomposition()) CHECK(s.count(p) == 1);
      CHECK(l.inertia.order() <= 2);
      CHECK(l.in_s == (s.count(p) == 1));
    }
  }
}

TEST_CASE("relabelling changes only the Frobenius representative") {
  auto f = field_data(5, 13);
  auto x = local_galois(f, 5), y = local_galois(f, 5, true);
  CHECK(x.inertia == y.inertia);
  CHECK(x.decomposition == y.decomposition);
  CHECK_FALSE(x.frob == y.frob);
  CHECK(x.inertia.contains(x.frob * y.frob));
}

TEST_CASE("ramified_set examples") {
  CHECK(ramified_set(field_data(5, 13)) == std::set<long>{5, 13});
  CHECK(ramified_set(field_data(2, 17)) == std::set<long>{2, 17});
  CHECK(ramified_set(field_data(13, 17)) == std::set<long>{13, 17});
  CHECK(ramified_set(field_data(3, 7)) == std::set<long>{2, 3, 7});
}

TEST_CASE("euler_factor and frob_det_quotient examples") {
  auto f = field_data(5, 13);
  auto l5 = local_galois(f, 5);
  GaloisChar one(FiniteGroupId::V4, CharLabel::One);
  GaloisChar chi13(FiniteGroupId::V4, f.char_of_subfield(13));
  GaloisChar chi5(FiniteGroupId::V4, f.char_of_subfield(5));
  CHECK(euler_factor(one, l5) == frac(4, 5));
  CHECK(euler_factor(chi13, l5) == frac(6, 5));
  CHECK(euler_factor(chi5, l5) == 1);
  CHECK(frob_det_quotient(one, l5) == 1);
  CHECK(frob_det_quotient(chi13, l5) == 2);
  CHECK(frob_det_quotient(chi5, l5) == 1);
}

TEST_CASE("artin conductors") {
  auto f = field_data(5, 13);
  CHECK(artin_conductor(GaloisChar(FiniteGroupId::V4, CharLabel::One), f) == 1);
  CHECK(artin_conductor(GaloisChar(FiniteGroupId::V4, f.char_of_subfield(5)), f) == 5);
  auto g = field_data(2, 17);
  CHECK(artin_conductor(GaloisChar(FiniteGroupId::V4, g.char_of_subfield(2)), g) == 8);
}

TEST_CASE("product of conductors is a square") {
  for (auto [d1, d2] : small_fields(100)) {
    auto f = field_data(d1, d2);
    Integer prod = 1;
    for (const auto& chi : characters(FiniteGroupId::V4)) prod *= artin_conductor(chi, f);
    Integer root = sqrt(prod);
    CHECK(root * root == prod);
  }
}

TEST_CASE("Euler factors pair up when the decomposition group is proper") {
  for (auto [d1, d2] : small_fields(50)) {
    auto f = field_data(d1, d2);
    for (long p : small_primes(60)) {
      auto l = local_galois(f, p);
      if (l.decomposition.order() > 2) continue;
      std::map<Rational, int> counts;
      for (const auto& chi : characters(FiniteGroupId::V4)) ++counts[euler_factor(chi, l)];
      for (const auto& [value, n] : counts) CHECK(n % 2 == 0);
    }
  }
}

TEST_CASE("FieldData and PrimeLocalData JSON") {
  auto f = field_data(2, 17);
  auto j = to_json(f);
  CHECK(j["d3"] == 34);
  CHECK(j["subfield_discs"]["chi1chi2"] == 136);
  auto l = to_json(local_galois(field_data(5, 13), 5));
  CHECK(l["inertia"] == "<a>");
  CHECK(l.contains("a_p"));
}
