#include <doctest.h>

#include "generators.hpp"
#include "tq/errors.hpp"
#include "tq/local_terms.hpp"
#include "tq/perfect_complex.hpp"

using namespace tq;

namespace {

RationalMatrix random_matrix(testing::Gen& gen, std::size_t rows, std::size_t cols, long bound = 4) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gen.integer(-bound, bound);
  return m;
}

RationalMatrix random_invertible(testing::Gen& gen, std::size_t n) {
  for (;;) {
    auto m = random_matrix(gen, n, n);
    if (determinant(m) != 0) return m;
  }
}

// Three-term complex P^l -> P^{l+1} -> P^{l+2} with matching odd and even
// dimensions; d_{l+1} d_l = 0 by building d_l inside ker d_{l+1}.
RationalComplex random_complex(testing::Gen& gen, int lowest) {
  std::size_t n0 = gen.integer(0, 2), n2 = gen.integer(0, 2);
  std::size_t n1 = n0 + n2;
  RationalComplex c;
  c.lowest_degree = lowest;
  c.dims = {n0, n1, n2};
  auto d1 = random_matrix(gen, n2, n1);
  if (gen.integer(0, 2) == 0) d1 = RationalMatrix(n2, n1);
  std::vector<RationalVector> ker;
  if (n2 == 0) {
    for (std::size_t k = 0; k < n1; ++k) {
      RationalVector v(n1, Rational(0));
      v[k] = 1;
      ker.push_back(v);
    }
  } else if (n1 > 0) {
    ker = kernel_basis(d1);
  }
  RationalMatrix d0(n1, n0);
  if (!ker.empty()) {
    auto k = RationalMatrix::from_columns(n1, ker);
    d0 = k * random_matrix(gen, ker.size(), n0, 2);
  }
  c.differentials = {d0, d1};
  return c;
}

int parity_of(int j) { return ((j % 2) + 2) % 2; }

// A random cohomology isomorphism built from the canonical cohomology bases.
CohomologyIsoComponent random_iso(testing::Gen& gen, const RationalComplex& c) {
  CohomologyIsoComponent psi;
  for (const auto& b : cohomology_basis(c)) {
    for (const auto& v : b.cohomology) {
      CocycleRep r{b.degree, v};
      (parity_of(b.degree) ? psi.source : psi.target).push_back(r);
    }
  }
  psi.matrix = random_invertible(gen, psi.source.size());
  return psi;
}

CohomologyIsoComponent empty_iso() {
  CohomologyIsoComponent psi;
  psi.matrix = RationalMatrix(0, 0);
  return psi;
}

const GroupElement a = GroupElement::v4(1, 0);
const GroupElement b = GroupElement::v4(0, 1);

// Closed-form determinants of the tame complex in the four character cases.
Rational tame_expected(long p, int chi_a, int chi_b) {
  if (chi_a == 1 && chi_b == 1) return frac(1, 2 * p - 2);
  if (chi_a == 1 && chi_b == -1) return frac(-2, p + 1);
  return -1;
}

}  // namespace

TEST_CASE("PerfectComplex validates shapes and d^2 = 0") {
  GroupRingMatrix d0(FiniteGroupId::V4, 1, 1), d1(FiniteGroupId::V4, 1, 1);
  d0.at(0, 0) = a + Rational(1);
  d1.at(0, 0) = a - Rational(1);
  CHECK_NOTHROW(PerfectComplex(0, {1, 1, 1}, {d0, d1}));
  d1.at(0, 0) = a + Rational(1);
  CHECK_THROWS_AS(PerfectComplex(0, {1, 1, 1}, {d0, d1}), ContractViolation);
  CHECK_THROWS_AS(PerfectComplex(0, {1, 2}, {d0}), ContractViolation);
  CHECK_THROWS_AS(PerfectComplex(0, {1, 1}, {}), ContractViolation);
  CHECK_THROWS_AS(PerfectComplex(0, {1, 1}, {GroupRingMatrix(FiniteGroupId::Q8, 1, 1)}), UnsupportedGroupError);
}

TEST_CASE("char_specialize of the zero and tame complexes") {
  PerfectComplex zero(0, {2, 2}, {GroupRingMatrix(FiniteGroupId::V4, 2, 2)});
  for (const auto& chi : characters(FiniteGroupId::V4))
    CHECK(char_specialize(zero, chi).differentials[0].is_zero());

  auto tame = build_tame_complex({5, a, b});
  auto one = char_specialize(tame, GaloisChar::v4_from_values(1, 1));
  // lambda at the trivial character: (p - 1) z1 + 0 z2; phi vanishes.
  CHECK(one.differentials[0] == RationalMatrix{{4}, {0}});
  CHECK(one.differentials[1].is_zero());
  auto unram = char_specialize(tame, GaloisChar::v4_from_values(1, -1));
  CHECK(unram.differentials[0] == RationalMatrix{{-6}, {0}});
}

TEST_CASE("cohomology_basis examples") {
  RationalComplex c{0, {1, 1}, {RationalMatrix{{2}}}};
  auto bases = cohomology_basis(c);
  REQUIRE(bases.size() == 2);
  CHECK(bases[0].kernel.empty());
  CHECK(bases[0].cohomology.empty());
  CHECK(bases[1].image.size() == 1);
  CHECK(bases[1].cohomology.empty());

  auto tame = build_tame_complex({7, a, b});
  for (const auto& chi : characters(FiniteGroupId::V4)) {
    auto cb = cohomology_basis(char_specialize(tame, chi));
    std::size_t h_minus1 = cb[1].cohomology.size(), h0 = cb[2].cohomology.size();
    std::size_t want = chi.is_trivial() ? 1 : 0;
    CHECK(h_minus1 == want);
    CHECK(h0 == want);
    CHECK(cb[0].cohomology.empty());
  }
}

TEST_CASE("cohomology_basis is deterministic and spans the kernels") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_complex(gen, static_cast<int>(gen.integer(-2, 1)));
    auto first = cohomology_basis(c), second = cohomology_basis(c);
    REQUIRE(first.size() == second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      CHECK(first[k].cohomology == second[k].cohomology);
      CHECK(first[k].image.size() + first[k].cohomology.size() == first[k].kernel.size());
    }
  }
}

TEST_CASE("tame complex determinants for odd primes") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    TameComplexSpec spec{p, a, b};
    auto h = class_representative(build_tame_complex(spec), valuation_iso(spec));
    CHECK(h == HomRep(frac(1, 2 * p - 2), -1, frac(-2, p + 1), -1));
  }
  TameComplexSpec p5{5, a, b};
  CHECK(class_representative(build_tame_complex(p5), valuation_iso(p5)) == HomRep(frac(1, 8), -1, frac(-1, 3), -1));
  TameComplexSpec p13{13, a, b};
  CHECK(class_representative(build_tame_complex(p13), valuation_iso(p13)) ==
        HomRep(frac(1, 24), -1, frac(-1, 7), -1));
}

TEST_CASE("tame determinants against a direct two-by-two computation") {
  // On P^{-1} with basis (lambda(w), s) the map sends lambda(w) to w and s to
  // d(s) when the character is nontrivial; at the trivial character s is the
  // class T and goes to t. The determinant is then 1 * d(s) / det[lambda(w) s].
  for (long p = 3; p <= 50; p += 2) {
    if (!is_prime(p)) continue;
    for (const auto& chi : characters(FiniteGroupId::V4)) {
      auto c = char_specialize(build_tame_complex({p, a, b}), chi);
      Rational l1 = c.differentials[0](0, 0), l2 = c.differentials[0](1, 0);
      Rational s1, s2, ds;
      if (chi.is_trivial()) {
        s1 = -2, s2 = 2, ds = 1;
      } else {
        const auto& phi = c.differentials[1];
        s1 = phi(0, 0) != 0 ? 1 : 0;
        s2 = phi(0, 0) != 0 ? 0 : 1;
        ds = phi(0, 0) * s1 + phi(0, 1) * s2;
      }
      Rational direct = ds / (l1 * s2 - l2 * s1);
      TameComplexSpec spec{p, a, b};
      CHECK(torsion_determinant(c, valuation_iso(spec)[chi.label()]) == direct);
      CHECK(direct == tame_expected(p, chi(a), chi(b)));
    }
  }
}

TEST_CASE("splitting independence on the tame complex") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    TameComplexSpec spec{p, a, b};
    auto cx = build_tame_complex(spec);
    auto iso = valuation_iso(spec);
    for (const auto& chi : characters(FiniteGroupId::V4)) {
      auto c = char_specialize(cx, chi);
      Rational canonical = torsion_determinant(c, iso[chi.label()]);
      for (std::uint64_t seed = 1; seed <= 100; ++seed)
        CHECK(torsion_determinant(c, iso[chi.label()], SplittingChoice::random(seed)) == canonical);
    }
  }
}

TEST_CASE("splitting independence on random complexes") {
  testing::Gen gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_complex(gen, static_cast<int>(gen.integer(-3, 2)));
    auto psi = random_iso(gen, c);
    Rational canonical = torsion_determinant(c, psi);
    CHECK(canonical != 0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      CHECK(torsion_determinant(c, psi, SplittingChoice::random(seed)) == canonical);
  }
}

TEST_CASE("rescaling law") {
  testing::Gen gen(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_complex(gen, static_cast<int>(gen.integer(-3, 2)));
    auto psi = random_iso(gen, c);
    Rational base = torsion_determinant(c, psi);
    Rational k = gen.nonzero_rational(5);
    std::size_t n = psi.source.size();

    auto scaled_matrix = psi;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) scaled_matrix.matrix(r, col) *= k;
    CHECK(torsion_determinant(c, scaled_matrix) == base * rational_pow(k, static_cast<long>(n)));

    // Scaling odd representatives scales the source, even ones the target.
    auto scaled_odd = psi;
    for (auto& r : scaled_odd.source)
      for (auto& x : r.coords) x *= k;
    CHECK(torsion_determinant(c, scaled_odd) == base * rational_pow(k, -static_cast<long>(n)));

    auto scaled_even = psi;
    for (auto& r : scaled_even.target)
      for (auto& x : r.coords) x *= k;
    CHECK(torsion_determinant(c, scaled_even) == base * rational_pow(k, static_cast<long>(n)));
  }
}

TEST_CASE("direction of the cohomology isomorphism") {
  testing::Gen gen(47);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_complex(gen, 0);
    auto psi = random_iso(gen, c);
    auto flipped = psi;
    flipped.direction = IsoDirection::EvenToOdd;
    std::swap(flipped.source, flipped.target);
    flipped.matrix = inverse(psi.matrix);
    CHECK(torsion_determinant(c, flipped) == torsion_determinant(c, psi));
  }
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    TameComplexSpec spec{p, a, b};
    auto cx = build_tame_complex(spec);
    auto forward = class_representative(cx, valuation_iso(spec, IsoDirection::OddToEven));
    auto backward = class_representative(cx, valuation_iso(spec, IsoDirection::EvenToOdd));
    CHECK(torsion_class(forward) == torsion_class(backward));
  }
}

TEST_CASE("torsion_determinant contract violations") {
  TameComplexSpec spec{5, a, b};
  auto c = char_specialize(build_tame_complex(spec), GaloisChar::v4_from_values(1, 1));
  auto psi = valuation_iso(spec)[CharLabel::One];

  auto singular = psi;
  singular.matrix = RationalMatrix{{0}};
  CHECK_THROWS_AS(torsion_determinant(c, singular), ContractViolation);

  auto wrong_shape = psi;
  wrong_shape.matrix = RationalMatrix{{1, 0}};
  CHECK_THROWS_AS(torsion_determinant(c, wrong_shape), ContractViolation);

  auto not_cocycle = psi;
  not_cocycle.target[0].degree = -2;
  CHECK_THROWS_AS(torsion_determinant(c, not_cocycle), ContractViolation);

  auto coboundary = psi;
  coboundary.source[0].coords = {4, 0};  // lambda(w): zero in cohomology
  CHECK_THROWS_AS(torsion_determinant(c, coboundary), ContractViolation);

  CHECK_THROWS_AS(torsion_determinant(c, empty_iso()), ContractViolation);
}

TEST_CASE("constant class for zero differentials and identity iso") {
  RationalComplex c{0, {2, 2}, {RationalMatrix(2, 2)}};
  CohomologyIsoComponent psi;
  psi.source = {{1, {1, 0}}, {1, {0, 1}}};
  psi.target = {{0, {1, 0}}, {0, {0, 1}}};
  psi.matrix = RationalMatrix::identity(2);
  CHECK(torsion_determinant(c, psi) == 1);

  PerfectComplex zero(0, {2, 2}, {GroupRingMatrix(FiniteGroupId::V4, 2, 2)});
  CohomologyIso iso;
  for (auto label : kCharLabels) iso[label] = psi;
  CHECK(class_representative(zero, iso) == HomRep());
}

TEST_CASE("acyclic two-term complex") {
  RationalComplex c{0, {1, 1}, {RationalMatrix{{2}}}};
  CHECK(torsion_determinant(c, empty_iso()) == frac(1, 2));
  RationalComplex shifted{-1, {1, 1}, {RationalMatrix{{2}}}};
  CHECK(torsion_determinant(shifted, empty_iso()) == 2);
}

TEST_CASE("euler_characteristic") {
  CHECK(euler_characteristic(build_tame_complex({3, a, b})) == 0);
  CHECK(euler_characteristic(PerfectComplex()) == 0);
  CHECK(euler_characteristic(PerfectComplex(0, {3}, {})) == -3);
}

TEST_CASE("PerfectComplex JSON round-trip") {
  auto cx = build_tame_complex({11, a, b});
  auto j = to_json(cx);
  CHECK(j["lowest_degree"] == -2);
  CHECK(j["ranks"] == nlohmann::json::array({1, 2, 1}));
  auto back = perfect_complex_from_json(j);
  CHECK(back.lowest_degree() == cx.lowest_degree());
  CHECK(back.ranks() == cx.ranks());
  CHECK(back.differentials() == cx.differentials());
}
