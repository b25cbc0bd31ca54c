#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tq/group_ring.hpp"
#include "tq/linalg.hpp"
#include "tq/relk0.hpp"

namespace tq {

/// Bounded cochain complex of free Z[V4]-modules
///   0 -> P^n -d_n-> P^{n+1} -> ... -> P^m -> 0.
/// differentials[k] is d_{n+k} : P^{n+k} -> P^{n+k+1}, a
/// rank(n+k+1) x rank(n+k) group ring matrix (column convention).
/// Construction checks shapes and that consecutive differentials compose to
/// zero in the group ring.
class PerfectComplex {
 public:
  PerfectComplex() = default;
  PerfectComplex(int lowest_degree, std::vector<std::size_t> ranks, std::vector<GroupRingMatrix> differentials);

  int lowest_degree() const { return lowest_degree_; }
  int highest_degree() const { return lowest_degree_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const { return ranks_.empty(); }
  std::size_t rank(int degree) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<GroupRingMatrix>& differentials() const { return differentials_; }
  /// d_degree; throws if out of range.
  const GroupRingMatrix& differential(int degree) const;

 private:
  int lowest_degree_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<GroupRingMatrix> differentials_;
};

/// A complex of finite-dimensional Q-vector spaces (same layout as above).
struct RationalComplex {
  int lowest_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> differentials;

  int highest_degree() const { return lowest_degree + static_cast<int>(dims.size()) - 1; }
  bool has_degree(int j) const { return !dims.empty() && j >= lowest_degree && j <= highest_degree(); }
  std::size_t dim(int j) const { return has_degree(j) ? dims[j - lowest_degree] : 0; }
  /// d_j, or nullptr at the top degree.
  const RationalMatrix* differential(int j) const;
};

RationalComplex char_specialize(const PerfectComplex& p, const GaloisChar& chi);

/// Checks shapes and d_{j+1} d_j = 0; throws ContractViolation.
void validate(const RationalComplex& c);

struct DegreeBases {
  int degree = 0;
  std::vector<RationalVector> kernel;      // ker d_j (RREF null-space basis)
  std::vector<RationalVector> image;       // im d_{j-1}, d_{j-1} applied to pivot columns
  std::vector<RationalVector> cohomology;  // kernel vectors completing `image` to a basis of ker d_j
};

std::vector<DegreeBases> cohomology_basis(const RationalComplex& c);

/// An explicit cocycle representing a cohomology class.
struct CocycleRep {
  int degree = 0;
  RationalVector coords;
};

enum class IsoDirection : std::uint8_t {
  OddToEven,  // matrix maps classes of `source` (odd) to classes of `target` (even)
  EvenToOdd,  // matrix maps even `source` classes to odd `target`; inverted before use
};

/// One character's component of a rational cohomology isomorphism.
/// Column i of `matrix` holds the coordinates of the image of source[i]
/// in the `target` classes.
struct CohomologyIsoComponent {
  std::vector<CocycleRep> source;
  std::vector<CocycleRep> target;
  RationalMatrix matrix;
  IsoDirection direction = IsoDirection::OddToEven;
};

/// Per-character components, indexed by CharLabel.
struct CohomologyIso {
  std::array<CohomologyIsoComponent, 4> components;

  const CohomologyIsoComponent& operator[](CharLabel c) const { return components[static_cast<int>(c)]; }
  CohomologyIsoComponent& operator[](CharLabel c) { return components[static_cast<int>(c)]; }
};

/// Which complements are used for ker d_j in P^j and for im d_{j-1} in
/// ker d_j. Canonical uses RREF pivots; Random draws seeded integer
/// complements and perturbs cohomology representatives by coboundaries.
struct SplittingChoice {
  bool randomized = false;
  std::uint64_t seed = 0;

  static SplittingChoice canonical() { return {}; }
  static SplittingChoice random(std::uint64_t seed) { return {true, seed}; }
};

/// Determinant, in the standard bases of P^od and P^ev (ascending degree,
/// then index), of the isomorphism P^od ⊗ Q -> P^ev ⊗ Q assembled from the
/// splittings and the cohomology isomorphism. Independent of the splittings.
/// Throws ContractViolation if the isomorphism has the wrong shape, its
/// representatives are not cocycles forming a cohomology basis, or it is
/// singular.
Rational torsion_determinant(const RationalComplex& c, const CohomologyIsoComponent& psi,
                             const SplittingChoice& splitting = SplittingChoice::canonical());

/// The Hom-description representative of [P^od, phi, P^ev]: the torsion
/// determinant of each character specialization.
HomRep class_representative(const PerfectComplex& p, const CohomologyIso& psi,
                            const SplittingChoice& splitting = SplittingChoice::canonical());

/// Σ_j (-1)^{j+1} rank P^j.
long euler_characteristic(const PerfectComplex& p);

nlohmann::json to_json(const PerfectComplex& p);
PerfectComplex perfect_complex_from_json(const nlohmann::json& j);

}  // namespace tq
