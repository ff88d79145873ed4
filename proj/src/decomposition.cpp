#include "symarr/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "symarr/errors.hpp"

namespace symarr {

std::size_t Decomposition::isotype_of(std::size_t subspace) const {
  for (std::size_t k = 0; k < isotypes.size(); ++k) {
    if (std::find(isotypes[k].begin(), isotypes[k].end(), subspace) != isotypes[k].end()) return k;
  }
  throw Error(ErrorKind::DimensionMismatch, "subspace index out of range");
}

Matrix Decomposition::isotypic_projector(std::size_t k) const {
  const int n = group.degree();
  Matrix p = Matrix::Zero(n, n);
  for (std::size_t j : isotypes.at(k)) p += subspaces[j].projector();
  return p;
}

namespace {

constexpr double kClusterRelGap = 1e-6;

struct Candidate {
  ArrangementSpace space;
  Representation rep;
  std::vector<long long> key;
};

// Eigenvalue clusters of a symmetric matrix: consecutive eigenvalues closer
// than kClusterRelGap * spread share an eigenspace.
std::vector<Matrix> eigenspaces(const Matrix& r) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(r);
  const Vector& lam = es.eigenvalues();
  const Eigen::Index n = lam.size();
  const double spread = lam(n - 1) - lam(0);
  std::vector<Matrix> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || lam(i) - lam(i - 1) > kClusterRelGap * spread) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

std::vector<long long> ordering_key(const Matrix& proj) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(proj.size()));
  for (Eigen::Index j = 0; j < proj.cols(); ++j) {
    for (Eigen::Index i = 0; i < proj.rows(); ++i) key.push_back(std::llround(proj(i, j) * 1e8));
  }
  return key;
}

std::optional<std::vector<Candidate>> attempt(const PermutationGroup& g, const std::vector<Matrix>& commutant,
                                              std::uint64_t seed, const Tolerance& tol) {
  const int n = g.degree();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix r = Matrix::Zero(n, n);
  for (const auto& b : commutant) r += normal(rng) * b;

  std::vector<Candidate> out;
  for (const Matrix& q : eigenspaces(r)) {
    const int m = static_cast<int>(q.cols());
    ArrangementSpace space(linalg::canonical_basis(linalg::projector(q), m));
    try {
      Representation rep = restricted_representation(space, g, tol);
      if (!is_irreducible(rep, tol)) return std::nullopt;
      std::vector<long long> key = ordering_key(space.projector());
      out.push_back({std::move(space), std::move(rep), std::move(key)});
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

Decomposition decompose_permutation_representation(const PermutationGroup& g, std::uint64_t seed,
                                                   const Tolerance& tol) {
  if (g.degree() < 1) throw Error(ErrorKind::DimensionMismatch, "decomposition needs at least one point");
  const Representation perm = Representation::permutation(g);
  const std::vector<Matrix> commutant = symmetric_commutant_basis(perm, tol);

  Decomposition dec{g, {}, {}, {}, {}, seed, {}};
  std::optional<std::vector<Candidate>> found;
  for (int k = 0; k <= kDecompositionRetries && !found; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    dec.seed_trail.push_back(s);
    found = attempt(g, commutant, s, tol);
    if (found) dec.seed = s;
  }
  if (!found) {
    std::string trail;
    for (auto s : dec.seed_trail) trail += (trail.empty() ? "" : ",") + std::to_string(s);
    throw Error(ErrorKind::DecompositionFailed, "no irreducible splitting found; seeds tried: " + trail);
  }

  std::vector<Candidate>& cands = *found;
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.space.rank() != b.space.rank()) return a.space.rank() > b.space.rank();
    return a.key < b.key;
  });
  for (auto& c : cands) {
    dec.subspaces.push_back(std::move(c.space));
    dec.representations.push_back(std::move(c.rep));
  }
  for (std::size_t i = 0; i < dec.subspaces.size(); ++i) {
    bool placed = false;
    for (auto& cls : dec.isotypes) {
      if (are_isomorphic(dec.representations[cls.front()], dec.representations[i], tol)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) dec.isotypes.push_back({i});
  }
  for (const auto& cls : dec.isotypes) dec.multiplicities.push_back(cls.size());

  int total = 0;
  for (const auto& s : dec.subspaces) total += s.rank();
  if (total != g.degree()) {
    throw Error(ErrorKind::DecompositionFailed, "constituent dimensions sum to " + std::to_string(total));
  }
  return dec;
}

std::size_t isotype_index_of(const ArrangementSpace& u, const Decomposition& d, const Tolerance& tol) {
  if (u.ambient() != d.group.degree()) throw Error(ErrorKind::DimensionMismatch, "space and group sizes differ");
  if (u.is_zero() || !is_invariant_space(u, d.group, tol)) {
    throw Error(ErrorKind::NotInvariant, "space is not a non-zero invariant subspace");
  }
  const Representation rep = restricted_representation(u, d.group, tol);
  if (!is_irreducible(rep, tol)) throw Error(ErrorKind::NotIrreducible, "space is reducible");
  for (std::size_t k = 0; k < d.isotypes.size(); ++k) {
    if (are_isomorphic(d.representations[d.isotypes[k].front()], rep, tol)) return k;
  }
  throw Error(ErrorKind::VerificationFailed, "space matches no isotype of the decomposition");
}

std::size_t multiplicity_of(const ArrangementSpace& u, const Decomposition& d, const Tolerance& tol) {
  return d.multiplicities[isotype_index_of(u, d, tol)];
}

std::vector<Arrangement> aligned_constituents(const Decomposition& d, std::size_t k, const Tolerance& tol) {
  const auto& members = d.isotypes.at(k);
  const Representation& target = d.representations[members.front()];
  std::vector<Arrangement> out;
  for (std::size_t j : members) {
    const Arrangement w = representative_from_space(d.subspaces[j]);
    const Matrix r = orthogonal_equivariant_map(d.representations[j], target, false, tol);
    out.push_back(w.transformed(r));
  }
  return out;
}

}  // namespace symarr
