#include "tq/perfect_complex.hpp"

#include <map>
#include <random>
#include <string>

#include "tq/errors.hpp"

namespace tq {

namespace {

int parity(int j) { return ((j % 2) + 2) % 2; }

}  // namespace

PerfectComplex::PerfectComplex(int lowest_degree, std::vector<std::size_t> ranks,
                               std::vector<GroupRingMatrix> differentials)
    : lowest_degree_(lowest_degree), ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (differentials_.size() != expected)
    throw ContractViolation("a complex with " + std::to_string(ranks_.size()) + " modules needs " +
                            std::to_string(expected) + " differentials");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const auto& d = differentials_[k];
    if (d.group() != FiniteGroupId::V4) throw UnsupportedGroupError("perfect complexes are modelled over Z[V4] only");
    if (d.cols() != ranks_[k] || d.rows() != ranks_[k + 1])
      throw ContractViolation("differential d_" + std::to_string(lowest_degree_ + static_cast<int>(k)) +
                              " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    if (!(differentials_[k + 1] * differentials_[k]).is_zero())
      throw ContractViolation("d_" + std::to_string(lowest_degree_ + static_cast<int>(k) + 1) + " d_" +
                              std::to_string(lowest_degree_ + static_cast<int>(k)) + " != 0");
  }
}

std::size_t PerfectComplex::rank(int degree) const {
  if (ranks_.empty() || degree < lowest_degree_ || degree > highest_degree()) return 0;
  return ranks_[degree - lowest_degree_];
}

const GroupRingMatrix& PerfectComplex::differential(int degree) const {
  int k = degree - lowest_degree_;
  if (k < 0 || k >= static_cast<int>(differentials_.size()))
    throw ContractViolation("no differential in degree " + std::to_string(degree));
  return differentials_[k];
}

const RationalMatrix* RationalComplex::differential(int j) const {
  int k = j - lowest_degree;
  if (k < 0 || k >= static_cast<int>(differentials.size())) return nullptr;
  return &differentials[k];
}

RationalComplex char_specialize(const PerfectComplex& p, const GaloisChar& chi) {
  RationalComplex c;
  c.lowest_degree = p.lowest_degree();
  c.dims = p.ranks();
  for (const auto& d : p.differentials()) c.differentials.push_back(apply_char_matrix(chi, d));
  return c;
}

void validate(const RationalComplex& c) {
  std::size_t expected = c.dims.empty() ? 0 : c.dims.size() - 1;
  if (c.differentials.size() != expected) throw ContractViolation("differential count does not match module count");
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    if (c.differentials[k].cols() != c.dims[k] || c.differentials[k].rows() != c.dims[k + 1])
      throw ContractViolation("differential has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    if (c.dims[k] == 0 || c.dims[k + 2] == 0) continue;
    if (!(c.differentials[k + 1] * c.differentials[k]).is_zero()) throw ContractViolation("d^2 != 0");
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<RationalVector> standard_basis(std::size_t n) {
  std::vector<RationalVector> out;
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector v(n, Rational(0));
    v[k] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RationalVector> kernel_of(const RationalComplex& c, int j) {
  const RationalMatrix* d = c.differential(j);
  if (d == nullptr || d->rows() == 0) return standard_basis(c.dim(j));
  if (d->cols() == 0) return {};
  return kernel_basis(*d);
}

/// Rank of the span of the given vectors in Q^n.
std::size_t span_rank(std::size_t n, const std::vector<RationalVector>& vs) {
  if (vs.empty() || n == 0) return 0;
  return rank(RationalMatrix::from_columns(n, vs));
}

/// Greedily extends `base` by vectors from `candidates`, keeping those that
/// raise the rank; returns the added vectors.
std::vector<RationalVector> complete(std::size_t n, std::vector<RationalVector> base,
                                     const std::vector<RationalVector>& candidates) {
  std::vector<RationalVector> added;
  std::size_t r = span_rank(n, base);
  for (const auto& v : candidates) {
    base.push_back(v);
    std::size_t r2 = span_rank(n, base);
    if (r2 > r) {
      added.push_back(v);
      r = r2;
    } else {
      base.pop_back();
    }
  }
  return added;
}

RationalVector apply(const RationalMatrix* d, const RationalVector& v) {
  return (*d) * v;
}

/// Per-degree splitting data: S_j is a complement of ker d_j in P^j.
struct Splitting {
  std::map<int, std::vector<RationalVector>> complement;  // S_j
  std::map<int, std::vector<RationalVector>> image;       // B_j = d_{j-1}(S_{j-1})
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}
  Rational small() { return Rational(static_cast<long>(dist_(gen_))); }
  RationalVector vector(std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = small();
    return v;
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<int> dist_{-6, 6};
};

Splitting choose_splitting(const RationalComplex& c, const SplittingChoice& choice, RandomSource* rng) {
  Splitting s;
  if (c.dims.empty()) return s;
  for (int j = c.lowest_degree; j <= c.highest_degree(); ++j) {
    const RationalMatrix* d = c.differential(j);
    std::vector<RationalVector> comp;
    if (d != nullptr && d->rows() > 0 && d->cols() > 0) {
      if (!choice.randomized) {
        // Standard basis vectors at pivot columns map isomorphically onto im d_j.
        for (auto p : rref(*d).pivots) {
          RationalVector e(c.dim(j), Rational(0));
          e[p] = 1;
          comp.push_back(std::move(e));
        }
      } else {
        std::size_t target = rank(*d);
        auto base = kernel_of(c, j);
        std::size_t r = span_rank(c.dim(j), base);
        while (comp.size() < target) {
          base.push_back(rng->vector(c.dim(j)));
          std::size_t r2 = span_rank(c.dim(j), base);
          if (r2 > r) {
            comp.push_back(base.back());
            r = r2;
          } else {
            base.pop_back();
          }
        }
      }
    }
    std::vector<RationalVector> img;
    for (const auto& v : comp) img.push_back(apply(d, v));
    s.complement[j] = std::move(comp);
    s.image[j + 1] = std::move(img);
  }
  return s;
}

void check_rep(const RationalComplex& c, const CocycleRep& r) {
  if (!c.has_degree(r.degree))
    throw ContractViolation("cohomology representative in degree " + std::to_string(r.degree) +
                            " outside the complex");
  if (r.coords.size() != c.dim(r.degree))
    throw ContractViolation("cohomology representative has the wrong length");
  if (const RationalMatrix* d = c.differential(r.degree); d != nullptr && d->rows() > 0) {
    if (!is_zero(apply(d, r.coords))) throw ContractViolation("cohomology representative is not a cocycle");
  }
}

/// Representatives of one parity must, with the coboundaries, span each
/// kernel exactly.
void check_basis(const RationalComplex& c, const std::vector<CocycleRep>& reps, int want_parity,
                 const Splitting& s) {
  std::map<int, std::vector<RationalVector>> by_degree;
  for (const auto& r : reps) {
    check_rep(c, r);
    if (parity(r.degree) != want_parity)
      throw ContractViolation("cohomology representative in degree " + std::to_string(r.degree) +
                              " has the wrong parity");
    by_degree[r.degree].push_back(r.coords);
  }
  for (int j = c.lowest_degree; j <= c.highest_degree(); ++j) {
    if (parity(j) != want_parity) continue;
    std::size_t kernel_dim = kernel_of(c, j).size();
    auto vs = s.image.count(j) ? s.image.at(j) : std::vector<RationalVector>{};
    auto& mine = by_degree[j];
    vs.insert(vs.end(), mine.begin(), mine.end());
    if (vs.size() != kernel_dim || span_rank(c.dim(j), vs) != kernel_dim)
      throw ContractViolation("cohomology representatives in degree " + std::to_string(j) +
                              " do not form a basis of the cohomology");
  }
}

}  // namespace

std::vector<DegreeBases> cohomology_basis(const RationalComplex& c) {
  validate(c);
  std::vector<DegreeBases> out;
  if (c.dims.empty()) return out;
  Splitting s = choose_splitting(c, SplittingChoice::canonical(), nullptr);
  for (int j = c.lowest_degree; j <= c.highest_degree(); ++j) {
    DegreeBases b;
    b.degree = j;
    b.kernel = kernel_of(c, j);
    b.image = s.image.count(j) ? s.image.at(j) : std::vector<RationalVector>{};
    b.cohomology = complete(c.dim(j), b.image, b.kernel);
    out.push_back(std::move(b));
  }
  return out;
}

Rational torsion_determinant(const RationalComplex& c, const CohomologyIsoComponent& psi_in,
                             const SplittingChoice& splitting) {
  validate(c);

  // Normalize to an odd-to-even isomorphism.
  CohomologyIsoComponent psi = psi_in;
  if (psi.matrix.rows() != psi.target.size() || psi.matrix.cols() != psi.source.size())
    throw ContractViolation("cohomology isomorphism matrix does not match its bases");
  if (psi.matrix.rows() != psi.matrix.cols()) throw ContractViolation("cohomology isomorphism is not square");
  if (psi.direction == IsoDirection::EvenToOdd) {
    psi.matrix = inverse(psi.matrix);
    std::swap(psi.source, psi.target);
    psi.direction = IsoDirection::OddToEven;
  } else if (!psi.matrix.empty() && determinant(psi.matrix) == 0) {
    throw ContractViolation("cohomology isomorphism is singular");
  }

  RandomSource rng(splitting.seed);
  Splitting s = choose_splitting(c, splitting, &rng);
  check_basis(c, psi.source, 1, s);
  check_basis(c, psi.target, 0, s);

  if (splitting.randomized) {
    // Moving a representative by a coboundary does not change its class.
    auto perturb = [&](std::vector<CocycleRep>& reps) {
      for (auto& r : reps) {
        if (!s.image.count(r.degree)) continue;
        for (const auto& b : s.image.at(r.degree)) {
          Rational k = rng.small();
          for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += k * b[i];
        }
      }
    };
    perturb(psi.source);
    perturb(psi.target);
  }

  // Offsets of each degree inside P^od and P^ev.
  std::map<int, std::size_t> offset;
  std::size_t dim_od = 0, dim_ev = 0;
  for (int j = c.lowest_degree; !c.dims.empty() && j <= c.highest_degree(); ++j) {
    std::size_t& total = parity(j) ? dim_od : dim_ev;
    offset[j] = total;
    total += c.dim(j);
  }
  if (dim_od != dim_ev)
    throw ContractViolation("odd and even parts have different dimensions; no isomorphism exists");

  std::vector<RationalVector> source_cols, image_cols;
  auto place = [&](int degree, const RationalVector& v, RationalVector& into) {
    for (std::size_t i = 0; i < v.size(); ++i) into[offset.at(degree) + i] += v[i];
  };

  std::map<int, std::vector<std::size_t>> source_by_degree;
  for (std::size_t i = 0; i < psi.source.size(); ++i) source_by_degree[psi.source[i].degree].push_back(i);

  for (int j = c.lowest_degree; !c.dims.empty() && j <= c.highest_degree(); ++j) {
    if (parity(j) != 1) continue;
    // B_j = d_{j-1}(S_{j-1}) goes back to S_{j-1} in the even degree below.
    if (c.has_degree(j - 1)) {
      const auto& comp = s.complement.at(j - 1);
      const auto& img = s.image.at(j);
      for (std::size_t k = 0; k < comp.size(); ++k) {
        RationalVector src(dim_od, Rational(0)), dst(dim_ev, Rational(0));
        place(j, img[k], src);
        place(j - 1, comp[k], dst);
        source_cols.push_back(std::move(src));
        image_cols.push_back(std::move(dst));
      }
    }
    // Odd cohomology goes through psi to even cohomology.
    for (std::size_t i : source_by_degree[j]) {
      RationalVector src(dim_od, Rational(0)), dst(dim_ev, Rational(0));
      place(j, psi.source[i].coords, src);
      for (std::size_t t = 0; t < psi.target.size(); ++t) {
        const Rational& m = psi.matrix(t, i);
        if (m == 0) continue;
        RationalVector scaled = psi.target[t].coords;
        for (auto& x : scaled) x *= m;
        place(psi.target[t].degree, scaled, dst);
      }
      source_cols.push_back(std::move(src));
      image_cols.push_back(std::move(dst));
    }
    // S_j maps onto B_{j+1} in the even degree above.
    for (const auto& v : s.complement.at(j)) {
      RationalVector src(dim_od, Rational(0)), dst(dim_ev, Rational(0));
      place(j, v, src);
      place(j + 1, apply(c.differential(j), v), dst);
      source_cols.push_back(std::move(src));
      image_cols.push_back(std::move(dst));
    }
  }

  if (source_cols.size() != dim_od)
    throw ContractViolation("cohomology isomorphism dimensions do not match the cohomology of the complex");
  if (dim_od == 0) return 1;

  Rational det_source = determinant(RationalMatrix::from_columns(dim_od, source_cols));
  if (det_source == 0) throw ContractViolation("splitting data does not span the odd part");
  Rational det_image = determinant(RationalMatrix::from_columns(dim_ev, image_cols));
  if (det_image == 0) throw ContractViolation("assembled map is not an isomorphism");
  return det_image / det_source;
}

HomRep class_representative(const PerfectComplex& p, const CohomologyIso& psi, const SplittingChoice& splitting) {
  return HomRep::from_function([&](const GaloisChar& chi) {
    return torsion_determinant(char_specialize(p, chi), psi[chi.label()], splitting);
  });
}

long euler_characteristic(const PerfectComplex& p) {
  long total = 0;
  for (int j = p.lowest_degree(); !p.empty() && j <= p.highest_degree(); ++j) {
    long sign = parity(j + 1) ? -1 : 1;
    total += sign * static_cast<long>(p.rank(j));
  }
  return total;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const PerfectComplex& p) {
  nlohmann::json j;
  j["group"] = "V4";
  j["lowest_degree"] = p.lowest_degree();
  j["ranks"] = p.ranks();
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : p.differentials()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [g, x] : d.at(r, c).coeffs()) entry[to_string(g)] = to_string(x);
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
    diffs.push_back(std::move(rows));
  }
  j["differentials"] = std::move(diffs);
  return j;
}

PerfectComplex perfect_complex_from_json(const nlohmann::json& j) {
  try {
    if (j.value("group", std::string("V4")) != "V4") throw UnsupportedGroupError("complexes must be over V4");
    int lowest = j.at("lowest_degree").get<int>();
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    std::vector<GroupRingMatrix> diffs;
    const auto& jd = j.at("differentials");
    for (std::size_t k = 0; k < jd.size(); ++k) {
      if (k + 1 >= ranks.size()) throw InputError("too many differentials");
      GroupRingMatrix m(FiniteGroupId::V4, ranks[k + 1], ranks[k]);
      const auto& rows = jd[k];
      if (rows.size() != ranks[k + 1]) throw InputError("differential row count does not match ranks");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ranks[k]) throw InputError("differential column count does not match ranks");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          GroupRingElem x(FiniteGroupId::V4);
          for (const auto& [name, value] : rows[r][c].items())
            x += GroupRingElem::of(parse_element(FiniteGroupId::V4, name), parse_rational(value.get<std::string>()));
          m.at(r, c) = std::move(x);
        }
      }
      diffs.push_back(std::move(m));
    }
    return PerfectComplex(lowest, std::move(ranks), std::move(diffs));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

}  // namespace tq
