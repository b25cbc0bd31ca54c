#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tq/rational.hpp"

namespace tq {

enum class FiniteGroupId : std::uint8_t { Trivial, C2, V4, Q8 };

std::string to_string(FiniteGroupId g);
int group_order(FiniteGroupId g);

/// Element in canonical normal form.
///   V4: a^i b^j, i, j in {0, 1}
///   Q8: x^i y^j, i in {0, 1}, j in {0..3}  (x^2 = y^2, y^4 = 1, xyx = y)
///   C2: g^i, i in {0, 1}
struct GroupElement {
  FiniteGroupId group = FiniteGroupId::Trivial;
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  static GroupElement identity(FiniteGroupId g) { return {g, 0, 0}; }
  static GroupElement v4(int i, int j);
  static GroupElement q8(int i, int j);

  bool is_identity() const { return i == 0 && j == 0; }

  /// Dense index: i + 2j for V4, i + 2j for Q8, i for C2.
  int index() const { return i + 2 * j; }

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement operator*(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Short name: "e", "a", "b", "ab" on V4; "1", "x", "y2", "xy3", ... on Q8.
std::string to_string(const GroupElement& g);
GroupElement parse_element(FiniteGroupId group, const std::string& name);

/// All elements in ascending index order.
std::vector<GroupElement> elements(FiniteGroupId g);

/// Labels of the four one-dimensional characters of V4 (= Q8^ab), and of Q8.
/// chi1(a) = -1, chi1(b) = 1, chi2(a) = 1, chi2(b) = -1, matching
/// chi1(x) = -1 = chi2(y), chi1(y) = 1 = chi2(x) under Q8 -> V4.
enum class CharLabel : std::uint8_t { One = 0, Chi1 = 1, Chi2 = 2, Chi1Chi2 = 3 };

inline constexpr std::array<CharLabel, 4> kCharLabels = {
    CharLabel::One, CharLabel::Chi1, CharLabel::Chi2, CharLabel::Chi1Chi2};

/// "1", "chi1", "chi2", "chi1chi2".
std::string to_string(CharLabel c);
CharLabel parse_char_label(const std::string& name);

/// A one-dimensional {±1}-valued character.
class GaloisChar {
 public:
  GaloisChar(FiniteGroupId group, CharLabel label);

  /// The character of V4 with prescribed values on a and b.
  static GaloisChar v4_from_values(int on_a, int on_b);

  FiniteGroupId group() const { return group_; }
  CharLabel label() const { return label_; }

  int operator()(const GroupElement& g) const;
  bool is_trivial() const { return label_ == CharLabel::One; }

  GaloisChar operator*(const GaloisChar& other) const;
  bool operator==(const GaloisChar&) const = default;

 private:
  FiniteGroupId group_;
  CharLabel label_;
};

/// One-dimensional characters of the group. Four for V4 and Q8, two for C2.
std::vector<GaloisChar> characters(FiniteGroupId g);

/// Finitely supported rational combination of group elements. Zero
/// coefficients are never stored.
class GroupRingElem {
 public:
  explicit GroupRingElem(FiniteGroupId group = FiniteGroupId::V4) : group_(group) {}
  GroupRingElem(FiniteGroupId group, std::map<GroupElement, Rational> coeffs);

  static GroupRingElem scalar(FiniteGroupId group, const Rational& c);
  static GroupRingElem of(const GroupElement& g, const Rational& c = 1);

  FiniteGroupId group() const { return group_; }
  const std::map<GroupElement, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const GroupElement& g) const;
  bool is_zero() const { return coeffs_.empty(); }

  GroupRingElem& operator+=(const GroupRingElem& other);
  GroupRingElem& operator-=(const GroupRingElem& other);
  GroupRingElem& operator*=(const Rational& c);

  friend GroupRingElem operator+(GroupRingElem x, const GroupRingElem& y) { return x += y; }
  friend GroupRingElem operator-(GroupRingElem x, const GroupRingElem& y) { return x -= y; }
  friend GroupRingElem operator-(GroupRingElem x) { return x *= Rational(-1); }
  friend GroupRingElem operator*(GroupRingElem x, const Rational& c) { return x *= c; }
  friend GroupRingElem operator*(const Rational& c, GroupRingElem x) { return x *= c; }
  friend GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y);

  bool operator==(const GroupRingElem& other) const;

 private:
  void add_term(const GroupElement& g, const Rational& c);

  FiniteGroupId group_;
  std::map<GroupElement, Rational> coeffs_;
};

std::string to_string(const GroupRingElem& x);

/// Convenience for literals like 1 + a: the group element as a ring element.
GroupRingElem operator+(const GroupElement& g, const Rational& c);
GroupRingElem operator-(const GroupElement& g, const Rational& c);

/// Matrix over the group ring. Column convention: entry (r, c) is the
/// coefficient of target basis vector r in the image of source basis vector c.
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  GroupRingMatrix(FiniteGroupId group, std::size_t rows, std::size_t cols);

  static GroupRingMatrix identity(FiniteGroupId group, std::size_t n);

  FiniteGroupId group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const GroupRingElem& at(std::size_t r, std::size_t c) const;
  GroupRingElem& at(std::size_t r, std::size_t c);

  bool is_zero() const;
  bool operator==(const GroupRingMatrix&) const = default;

 private:
  FiniteGroupId group_ = FiniteGroupId::V4;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GroupRingElem> entries_;
};

/// Matrix product; throws ContractViolation on shape mismatch.
GroupRingMatrix operator*(const GroupRingMatrix& x, const GroupRingMatrix& y);

/// The central idempotent (1/|G|) Σ_g chi(g) g of Q[V4].
GroupRingElem idempotent(const GaloisChar& chi);

/// Linear extension of chi to the group ring.
Rational apply_char(const GaloisChar& chi, const GroupRingElem& x);

class RationalMatrix;
RationalMatrix apply_char_matrix(const GaloisChar& chi, const GroupRingMatrix& m);

}  // namespace tq
