#include "tq/relk0.hpp"

#include <bit>
#include <sstream>

#include "tq/errors.hpp"

namespace tq {

TorsionClass::TorsionClass(long odd_residue) {
  long r = ((odd_residue % 4) + 4) % 4;
  if (r != 1 && r != 3) throw DomainError("torsion class from an even residue");
  unit_ = static_cast<int>(r);
}

TorsionClass TorsionClass::operator*(TorsionClass other) const {
  return TorsionClass(static_cast<long>(unit_) * other.unit_);
}

HomRep::HomRep(std::array<Rational, 4> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v == 0) throw DomainError("Hom-description values must be nonzero");
}

HomRep::HomRep(Rational one, Rational chi1, Rational chi2, Rational chi1chi2)
    : HomRep(std::array<Rational, 4>{std::move(one), std::move(chi1), std::move(chi2), std::move(chi1chi2)}) {}

Rational HomRep::total() const {
  Rational t = 1;
  for (const auto& v : values_) t *= v;
  return t;
}

HomRep HomRep::operator*(const HomRep& other) const {
  std::array<Rational, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = values_[k] * other.values_[k];
  return HomRep(std::move(v));
}

HomRep HomRep::inverse() const {
  std::array<Rational, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = 1 / values_[k];
  return HomRep(std::move(v));
}

HomRep HomRep::pow(long e) const {
  std::array<Rational, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = rational_pow(values_[k], e);
  return HomRep(std::move(v));
}

TorsionClass odd_part_mod4(const Rational& q) {
  if (q == 0) throw DomainError("odd part of zero");
  Rational odd = strip_two(q);
  // Odd residues are self-inverse mod 4, so num/den ≡ num·den.
  long num = mpz_fdiv_ui(odd.get_num().get_mpz_t(), 4);
  long den = mpz_fdiv_ui(odd.get_den().get_mpz_t(), 4);
  return TorsionClass(num * den);
}

TorsionClass torsion_class(const HomRep& h) { return odd_part_mod4(h.total()); }

RankVector rank_vector(const HomRep& h) {
  RankVector r{};
  for (int k = 0; k < 4; ++k) r[k] = v2(h.values()[k]);
  return r;
}

// ---------------------------------------------------------------------------

Subgroup Subgroup::generated_by(const GroupElement& g) {
  if (g.group != FiniteGroupId::V4) throw UnsupportedGroupError("subgroups are only modelled inside V4");
  return Subgroup(1u | (1u << g.index()));
}

Subgroup Subgroup::generated_by(const GroupElement& g, const GroupElement& h) {
  unsigned m = generated_by(g).mask_ | generated_by(h).mask_;
  if (std::popcount(m) == 3) m = 0xFu;
  return Subgroup(m);
}

bool Subgroup::contains(const GroupElement& g) const {
  return g.group == FiniteGroupId::V4 && (mask_ >> g.index()) & 1u;
}

int Subgroup::order() const { return std::popcount(mask_); }

GroupElement Subgroup::generator() const {
  if (order() != 2) throw ContractViolation("generator() needs a subgroup of order 2");
  for (const auto& g : elements(FiniteGroupId::V4))
    if (!g.is_identity() && contains(g)) return g;
  throw ContractViolation("unreachable");
}

bool Subgroup::char_trivial_on(const GaloisChar& chi) const {
  for (const auto& g : members())
    if (chi(g) != 1) return false;
  return true;
}

std::vector<GroupElement> Subgroup::members() const {
  std::vector<GroupElement> out;
  for (const auto& g : elements(FiniteGroupId::V4))
    if (contains(g)) out.push_back(g);
  return out;
}

std::string to_string(const Subgroup& h) {
  if (h.order() == 1) return "1";
  if (h.order() == 4) return "V4";
  return "<" + to_string(h.generator()) + ">";
}

std::pair<RankVector, TorsionClass> induce_from_subgroup(const Subgroup& h, const SubgroupHomRep& f) {
  if (h.order() > 2) throw ContractViolation("induction formula needs a proper subgroup of order 1 or 2");
  if (f.on_trivial == 0 || (h.order() == 2 && f.on_sign == 0))
    throw DomainError("Hom-description values must be nonzero");
  RankVector r{};
  for (auto c : kCharLabels) {
    GaloisChar chi(FiniteGroupId::V4, c);
    const Rational& value = h.char_trivial_on(chi) ? f.on_trivial : f.on_sign;
    r[static_cast<int>(c)] = v2(value);
  }
  return {r, TorsionClass(1)};
}

nlohmann::json to_json(const HomRep& h) {
  nlohmann::json j = nlohmann::json::object();
  for (auto c : kCharLabels) j[to_string(c)] = to_string(h[c]);
  return j;
}

HomRep hom_rep_from_json(const nlohmann::json& j) {
  std::array<Rational, 4> v;
  for (auto c : kCharLabels) {
    auto key = to_string(c);
    if (!j.contains(key)) throw InputError("HomRep JSON is missing key '" + key + "'");
    v[static_cast<int>(c)] = parse_rational(j.at(key).get<std::string>());
  }
  return HomRep(std::move(v));
}

std::string to_string(const HomRep& h) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < 4; ++k) os << (k ? ", " : "") << to_string(h.values()[k]);
  os << ")";
  return os.str();
}

}  // namespace tq
