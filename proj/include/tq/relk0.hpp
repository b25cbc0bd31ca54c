#pragma once

#include <array>
#include <string>
#include <utility>

#include <json.hpp>

#include "tq/group_ring.hpp"
#include "tq/rational.hpp"

namespace tq {

/// Class in (Z/4)^*, stored as 1 or 3.
class TorsionClass {
 public:
  constexpr TorsionClass() = default;
  /// Any odd integer; reduced mod 4.
  explicit TorsionClass(long odd_residue);

  constexpr int value() const { return unit_; }
  constexpr bool is_trivial() const { return unit_ == 1; }

  TorsionClass operator*(TorsionClass other) const;
  /// Every element of (Z/4)^* is its own inverse.
  TorsionClass inverse() const { return *this; }
  bool operator==(const TorsionClass&) const = default;

 private:
  int unit_ = 1;
};

/// Hom-description representative: a nonzero rational for each of the four
/// one-dimensional characters of V4, multiplied pointwise.
class HomRep {
 public:
  HomRep() { values_.fill(Rational(1)); }
  explicit HomRep(std::array<Rational, 4> values);
  HomRep(Rational one, Rational chi1, Rational chi2, Rational chi1chi2);

  /// Builds the representative chi -> f(chi) over the V4 characters.
  template <class F>
  static HomRep from_function(F&& f) {
    std::array<Rational, 4> v;
    for (auto c : kCharLabels) v[static_cast<int>(c)] = f(GaloisChar(FiniteGroupId::V4, c));
    return HomRep(std::move(v));
  }

  const Rational& operator[](CharLabel c) const { return values_[static_cast<int>(c)]; }
  const Rational& at(const GaloisChar& chi) const { return (*this)[chi.label()]; }
  const std::array<Rational, 4>& values() const { return values_; }

  /// f(1 + chi1 + chi2 + chi1chi2): the product of the four values.
  Rational total() const;

  HomRep operator*(const HomRep& other) const;
  HomRep inverse() const;
  HomRep pow(long e) const;
  bool operator==(const HomRep&) const = default;

 private:
  std::array<Rational, 4> values_;
};

using RankVector = std::array<long, 4>;

/// (q 2^{-v2(q)}) mod 4, with numerator and denominator odd parts reduced
/// mod 4. Throws DomainError for q = 0.
TorsionClass odd_part_mod4(const Rational& q);

/// Torsion invariant of a class: odd_part_mod4 of f(1 + chi1 + chi2 + chi1chi2).
TorsionClass torsion_class(const HomRep& h);

/// Per-character 2-adic valuations.
RankVector rank_vector(const HomRep& h);

/// Subgroups of V4 of order 1 or 2 are accepted by induce_from_subgroup.
class Subgroup {
 public:
  constexpr Subgroup() = default;
  static Subgroup trivial() { return Subgroup(1u); }
  static Subgroup whole() { return Subgroup(0xFu); }
  /// <g>; the trivial subgroup for g = e.
  static Subgroup generated_by(const GroupElement& g);
  static Subgroup generated_by(const GroupElement& g, const GroupElement& h);

  bool contains(const GroupElement& g) const;
  int order() const;
  /// The non-identity element of an order-2 subgroup.
  GroupElement generator() const;
  bool is_subgroup_of(const Subgroup& other) const { return (mask_ & ~other.mask_) == 0; }
  /// chi restricted to this subgroup is trivial.
  bool char_trivial_on(const GaloisChar& chi) const;
  std::vector<GroupElement> members() const;
  unsigned mask() const { return mask_; }

  bool operator==(const Subgroup&) const = default;

 private:
  explicit constexpr Subgroup(unsigned mask) : mask_(mask) {}
  unsigned mask_ = 1u;
};

std::string to_string(const Subgroup& h);

/// Values of f on the characters of H: `on_trivial` on the trivial character,
/// `on_sign` on the non-trivial one (ignored when H is trivial).
struct SubgroupHomRep {
  Rational on_trivial = 1;
  Rational on_sign = 1;
};

/// Ind_H^{V4} in the (rank, torsion) coordinates: the rank vector is
/// v2(f(Res_H chi)) and the torsion component is always 1.
/// Throws ContractViolation when |H| = 4.
std::pair<RankVector, TorsionClass> induce_from_subgroup(const Subgroup& h, const SubgroupHomRep& f);

// JSON: {"1": "num/den", "chi1": ..., "chi2": ..., "chi1chi2": ...}
nlohmann::json to_json(const HomRep& h);
HomRep hom_rep_from_json(const nlohmann::json& j);

std::string to_string(const HomRep& h);

}  // namespace tq
