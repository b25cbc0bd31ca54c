#include "tq/group_ring.hpp"

#include <sstream>

#include "tq/errors.hpp"
#include "tq/linalg.hpp"

namespace tq {

std::string to_string(FiniteGroupId g) {
  switch (g) {
    case FiniteGroupId::Trivial: return "Trivial";
    case FiniteGroupId::C2: return "C2";
    case FiniteGroupId::V4: return "V4";
    case FiniteGroupId::Q8: return "Q8";
  }
  return "?";
}

int group_order(FiniteGroupId g) {
  switch (g) {
    case FiniteGroupId::Trivial: return 1;
    case FiniteGroupId::C2: return 2;
    case FiniteGroupId::V4: return 4;
    case FiniteGroupId::Q8: return 8;
  }
  return 0;
}

GroupElement GroupElement::v4(int i, int j) {
  return {FiniteGroupId::V4, static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>(j & 1)};
}

GroupElement GroupElement::q8(int i, int j) {
  // x^2 = y^2 folds any power of x into {0, 1}.
  int jj = ((j % 4) + 4) % 4;
  int ii = ((i % 4) + 4) % 4;
  if (ii >= 2) {
    ii -= 2;
    jj = (jj + 2) % 4;
  }
  return {FiniteGroupId::Q8, static_cast<std::uint8_t>(ii), static_cast<std::uint8_t>(jj)};
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.group != h.group) throw GroupMismatchError("product of elements from different groups");
  switch (g.group) {
    case FiniteGroupId::Trivial:
      return g;
    case FiniteGroupId::C2:
      return {g.group, static_cast<std::uint8_t>(g.i ^ h.i), 0};
    case FiniteGroupId::V4:
      return {g.group, static_cast<std::uint8_t>(g.i ^ h.i), static_cast<std::uint8_t>(g.j ^ h.j)};
    case FiniteGroupId::Q8: {
      // y^j x = x y^{3j}, from yx = x^{-1} y = x y^3.
      if (h.i == 0) return GroupElement::q8(g.i, g.j + h.j);
      return GroupElement::q8(g.i + 1, 3 * g.j + h.j);
    }
  }
  return g;
}

GroupElement inverse(const GroupElement& g) {
  for (const auto& h : elements(g.group)) {
    if ((g * h).is_identity()) return h;
  }
  throw ContractViolation("element without inverse");
}

std::string to_string(const GroupElement& g) {
  switch (g.group) {
    case FiniteGroupId::Trivial: return "e";
    case FiniteGroupId::C2: return g.i ? "g" : "e";
    case FiniteGroupId::V4: {
      static const char* names[] = {"e", "a", "b", "ab"};
      return names[g.index()];
    }
    case FiniteGroupId::Q8: {
      if (g.is_identity()) return "1";
      std::string s = g.i ? "x" : "";
      if (g.j == 1) s += "y";
      if (g.j > 1) s += "y" + std::to_string(g.j);
      return s;
    }
  }
  return "?";
}

GroupElement parse_element(FiniteGroupId group, const std::string& name) {
  for (const auto& g : elements(group)) {
    if (to_string(g) == name) return g;
  }
  if (name == "1" || name == "e") return GroupElement::identity(group);
  throw InputError("unknown element '" + name + "' of " + to_string(group));
}

std::vector<GroupElement> elements(FiniteGroupId g) {
  std::vector<GroupElement> out;
  switch (g) {
    case FiniteGroupId::Trivial:
      out.push_back(GroupElement::identity(g));
      break;
    case FiniteGroupId::C2:
      out = {{g, 0, 0}, {g, 1, 0}};
      break;
    case FiniteGroupId::V4:
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) out.push_back(GroupElement::v4(i, j));
      break;
    case FiniteGroupId::Q8:
      for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 2; ++i) out.push_back(GroupElement::q8(i, j));
      break;
  }
  return out;
}

std::string to_string(CharLabel c) {
  switch (c) {
    case CharLabel::One: return "1";
    case CharLabel::Chi1: return "chi1";
    case CharLabel::Chi2: return "chi2";
    case CharLabel::Chi1Chi2: return "chi1chi2";
  }
  return "?";
}

CharLabel parse_char_label(const std::string& name) {
  for (auto c : kCharLabels) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unknown character label '" + name + "'");
}

GaloisChar::GaloisChar(FiniteGroupId group, CharLabel label) : group_(group), label_(label) {
  bool ok = group == FiniteGroupId::V4 || group == FiniteGroupId::Q8 ||
            (group == FiniteGroupId::C2 && (label == CharLabel::One || label == CharLabel::Chi1)) ||
            (group == FiniteGroupId::Trivial && label == CharLabel::One);
  if (!ok) throw UnsupportedGroupError("character " + to_string(label) + " does not exist on " + to_string(group));
}

GaloisChar GaloisChar::v4_from_values(int on_a, int on_b) {
  int bits = (on_a < 0 ? 1 : 0) | (on_b < 0 ? 2 : 0);
  return {FiniteGroupId::V4, static_cast<CharLabel>(bits)};
}

int GaloisChar::operator()(const GroupElement& g) const {
  if (g.group != group_) throw GroupMismatchError("character applied to element of another group");
  int bits = static_cast<int>(label_);
  int exponent = ((bits & 1) ? g.i : 0) + ((bits & 2) ? g.j : 0);
  return (exponent % 2) ? -1 : 1;
}

GaloisChar GaloisChar::operator*(const GaloisChar& other) const {
  if (other.group_ != group_) throw GroupMismatchError("product of characters of different groups");
  return {group_, static_cast<CharLabel>(static_cast<int>(label_) ^ static_cast<int>(other.label_))};
}

std::vector<GaloisChar> characters(FiniteGroupId g) {
  switch (g) {
    case FiniteGroupId::Trivial: return {{g, CharLabel::One}};
    case FiniteGroupId::C2: return {{g, CharLabel::One}, {g, CharLabel::Chi1}};
    case FiniteGroupId::V4:
    case FiniteGroupId::Q8: {
      std::vector<GaloisChar> out;
      for (auto c : kCharLabels) out.emplace_back(g, c);
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

GroupRingElem::GroupRingElem(FiniteGroupId group, std::map<GroupElement, Rational> coeffs) : group_(group) {
  for (auto& [g, c] : coeffs) add_term(g, c);
}

GroupRingElem GroupRingElem::scalar(FiniteGroupId group, const Rational& c) {
  GroupRingElem x(group);
  x.add_term(GroupElement::identity(group), c);
  return x;
}

GroupRingElem GroupRingElem::of(const GroupElement& g, const Rational& c) {
  GroupRingElem x(g.group);
  x.add_term(g, c);
  return x;
}

Rational GroupRingElem::coeff(const GroupElement& g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GroupRingElem::add_term(const GroupElement& g, const Rational& c) {
  if (g.group != group_) throw GroupMismatchError("group ring term from another group");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& other) {
  if (other.group_ != group_) throw GroupMismatchError("sum of group ring elements from different groups");
  for (const auto& [g, c] : other.coeffs_) add_term(g, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& other) {
  if (other.group_ != group_) throw GroupMismatchError("difference of group ring elements from different groups");
  for (const auto& [g, c] : other.coeffs_) add_term(g, -c);
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [g, x] : coeffs_) x *= c;
  return *this;
}

GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y) {
  if (x.group() != y.group()) throw GroupMismatchError("product of group ring elements from different groups");
  GroupRingElem out(x.group());
  for (const auto& [g, c] : x.coeffs())
    for (const auto& [h, d] : y.coeffs()) out.add_term(g * h, c * d);
  return out;
}

bool GroupRingElem::operator==(const GroupRingElem& other) const {
  return group_ == other.group_ && coeffs_ == other.coeffs_;
}

std::string to_string(const GroupRingElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")" << to_string(g);
  }
  return os.str();
}

GroupRingElem operator+(const GroupElement& g, const Rational& c) {
  return GroupRingElem::of(g) + GroupRingElem::scalar(g.group, c);
}

GroupRingElem operator-(const GroupElement& g, const Rational& c) {
  return GroupRingElem::of(g) - GroupRingElem::scalar(g.group, c);
}

// ---------------------------------------------------------------------------

GroupRingMatrix::GroupRingMatrix(FiniteGroupId group, std::size_t rows, std::size_t cols)
    : group_(group), rows_(rows), cols_(cols), entries_(rows * cols, GroupRingElem(group)) {}

GroupRingMatrix GroupRingMatrix::identity(FiniteGroupId group, std::size_t n) {
  GroupRingMatrix m(group, n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GroupRingElem::scalar(group, 1);
  return m;
}

const GroupRingElem& GroupRingMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ContractViolation("group ring matrix index out of range");
  return entries_[r * cols_ + c];
}

GroupRingElem& GroupRingMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw ContractViolation("group ring matrix index out of range");
  return entries_[r * cols_ + c];
}

bool GroupRingMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GroupRingMatrix operator*(const GroupRingMatrix& x, const GroupRingMatrix& y) {
  if (x.cols() != y.rows()) throw ContractViolation("group ring matrix shape mismatch in product");
  if (x.group() != y.group()) throw GroupMismatchError("group ring matrices over different groups");
  GroupRingMatrix out(x.group(), x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c)
      for (std::size_t k = 0; k < x.cols(); ++k) out.at(r, c) += x.at(r, k) * y.at(k, c);
  return out;
}

GroupRingElem idempotent(const GaloisChar& chi) {
  if (chi.group() != FiniteGroupId::V4) throw UnsupportedGroupError("idempotents are only provided for V4");
  GroupRingElem out(FiniteGroupId::V4);
  for (const auto& g : elements(FiniteGroupId::V4)) out += GroupRingElem::of(g, frac(chi(g), 4));
  return out;
}

Rational apply_char(const GaloisChar& chi, const GroupRingElem& x) {
  if (chi.group() != x.group()) throw GroupMismatchError("character and group ring element over different groups");
  Rational sum = 0;
  for (const auto& [g, c] : x.coeffs()) sum += chi(g) * c;
  return sum;
}

RationalMatrix apply_char_matrix(const GaloisChar& chi, const GroupRingMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = apply_char(chi, m.at(r, c));
  return out;
}

}  // namespace tq
