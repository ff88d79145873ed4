#include "symarr/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "symarr/errors.hpp"

namespace symarr {

struct Representation::Cache {
  std::once_flag once;
  std::vector<Matrix> images;
};

Representation::Representation(PermutationGroup group, int dim, std::vector<Matrix> generator_images)
    : group_(std::move(group)), gens_(std::move(generator_images)), dim_(dim), cache_(std::make_shared<Cache>()) {
  if (dim_ < 0) throw Error(ErrorKind::DimensionMismatch, "negative representation dimension");
  if (gens_.size() != group_.generators().size()) {
    throw Error(ErrorKind::DimensionMismatch, "need one image per generator");
  }
  for (const auto& m : gens_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "generator images must be square of equal size");
    }
  }
}

Representation Representation::permutation(const PermutationGroup& group) {
  std::vector<Matrix> imgs;
  for (const auto& g : group.generators()) imgs.push_back(permutation_matrix(g));
  return Representation(group, group.degree(), std::move(imgs));
}

Representation Representation::trivial(const PermutationGroup& group, int dim) {
  return Representation(group, dim, std::vector<Matrix>(group.generators().size(), Matrix::Identity(dim, dim)));
}

const Matrix& Representation::image(std::size_t element_index) const {
  std::call_once(cache_->once, [this] {
    const std::size_t order = group_.order();
    cache_->images.resize(order);
    for (std::size_t i = 0; i < order; ++i) {
      Matrix m = Matrix::Identity(dim_, dim_);
      for (int k : group_.word(i)) m = m * gens_[static_cast<std::size_t>(k)];
      cache_->images[i] = std::move(m);
    }
  });
  return cache_->images.at(element_index);
}

const Matrix& Representation::image(const Permutation& p) const {
  const auto idx = group_.index_of(p);
  if (!idx) throw Error(ErrorKind::DimensionMismatch, "permutation " + p.to_cycle_string() + " is not in the group");
  return image(*idx);
}

namespace {

bool same_generators(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) return false;
  const auto ga = a.generators();
  const auto gb = b.generators();
  return std::equal(ga.begin(), ga.end(), gb.begin(), gb.end());
}

void require_same_group(const Representation& t, const Representation& u) {
  if (!same_generators(t.group(), u.group())) {
    throw Error(ErrorKind::DimensionMismatch, "representations of different groups");
  }
}

}  // namespace

double orthogonality_residual(const Representation& t) {
  double worst = 0.0;
  for (const auto& m : t.generator_images()) worst = std::max(worst, linalg::orthogonality_residual(m));
  return worst;
}

double homomorphism_residual(const Representation& t) {
  const auto& g = t.group();
  double worst = 0.0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto ab = g.index_of(g.element(a) * g.element(b));
      worst = std::max(worst, (t.image(a) * t.image(b) - t.image(*ab)).norm());
    }
  }
  return worst;
}

double symmetry_residual(const Arrangement& v, const Representation& t) {
  if (v.size() != t.group().degree() || v.dim() != t.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "arrangement and representation shapes differ");
  }
  double worst = 0.0;
  const auto gens = t.group().generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix pm = permutation_matrix(gens[k]) * v.matrix();
    worst = std::max(worst, (pm - v.matrix() * t.generator_images()[k]).norm());
  }
  return worst;
}

double invariance_residual(const ArrangementSpace& u, const PermutationGroup& g) {
  if (u.ambient() != g.degree()) {
    throw Error(ErrorKind::DimensionMismatch, "space lives in R^" + std::to_string(u.ambient()) +
                                                  " but the group acts on " + std::to_string(g.degree()) +
                                                  " points");
  }
  const Matrix proj = u.projector();
  double worst = 0.0;
  for (const auto& p : g.generators()) {
    const Matrix pm = permutation_matrix(p);
    worst = std::max(worst, (pm * proj * pm.transpose() - proj).norm());
  }
  return worst;
}

bool is_invariant_space(const ArrangementSpace& u, const PermutationGroup& g, const Tolerance& tol) {
  return invariance_residual(u, g) <= tol.eps;
}

Representation extract_representation(const Arrangement& v, const PermutationGroup& g, const Tolerance& tol) {
  if (v.size() != g.degree()) throw Error(ErrorKind::DimensionMismatch, "point count differs from group degree");
  if (!is_normalized(v, tol)) throw Error(ErrorKind::NotNormalized, "representation extraction needs M^T M = I");
  if (!is_invariant_space(arrangement_space(v, tol), g, tol)) {
    throw Error(ErrorKind::SpaceNotInvariant, "arrangement space is not invariant under the group");
  }
  const Matrix& m = v.matrix();
  std::vector<Matrix> imgs;
  for (const auto& p : g.generators()) imgs.push_back(m.transpose() * permutation_matrix(p) * m);
  Representation t(g, v.dim(), std::move(imgs));
  const double slack = 10 * tol.eps * std::sqrt(static_cast<double>(v.dim()));
  const double orth = orthogonality_residual(t);
  const double sym = symmetry_residual(v, t);
  if (orth > slack || sym > slack) {
    throw Error(ErrorKind::VerificationFailed, "extracted representation residuals: orthogonality " +
                                                   std::to_string(orth) + ", symmetry " + std::to_string(sym));
  }
  return t;
}

Representation restricted_representation(const ArrangementSpace& u, const PermutationGroup& g,
                                         const Tolerance& tol) {
  return extract_representation(representative_from_space(u), g, tol);
}

SymmetryReport is_gamma_arrangement(const Arrangement& v, const PermutationGroup& g, const Tolerance& tol) {
  if (v.size() != g.degree()) throw Error(ErrorKind::DimensionMismatch, "point count differs from group degree");
  SymmetryReport report;
  const ArrangementSpace space = arrangement_space(v, tol);
  const auto alpha = is_spherical(v, tol);
  report.is_spherical = alpha.has_value();
  const double inv = invariance_residual(space, g);
  report.is_invariant_space = inv <= tol.eps;

  if (g.is_trivial()) {
    report.is_gamma = true;
    report.representation = Representation::trivial(g, v.dim());
    return report;
  }

  const auto gens = g.generators();
  if (alpha) {
    report.is_gamma = report.is_invariant_space;
    if (report.is_gamma) {
      report.representation = extract_representation(normalize(v, tol), g, tol);
    } else {
      const Matrix proj = space.projector();
      FailureWitness w{gens[0], -1.0};
      for (const auto& p : gens) {
        const Matrix pm = permutation_matrix(p);
        const double r = (pm * proj * pm.transpose() - proj).norm();
        if (r > w.residual) w = {p, r};
      }
      report.failure_witness = w;
    }
    return report;
  }

  if (space.rank() < v.dim()) {
    throw Error(ErrorKind::UnsupportedRankDeficient,
                "non-spherical arrangement of rank " + std::to_string(space.rank()) + " < " +
                    std::to_string(v.dim()) + ": its representation is not determined by the points");
  }
  const Matrix& m = v.matrix();
  const auto qr = m.colPivHouseholderQr();
  const double scale = m.norm();
  const double orth_slack = 10 * tol.eps * std::sqrt(static_cast<double>(v.dim()));
  std::vector<Matrix> imgs;
  FailureWitness worst{gens[0], -1.0};
  bool ok = true;
  for (const auto& p : gens) {
    const Matrix pm = permutation_matrix(p) * m;
    Matrix t = qr.solve(pm);
    const double orth = linalg::orthogonality_residual(t);
    const double eq = (pm - m * t).norm();
    const bool good = orth <= orth_slack && eq <= 10 * tol.eps * scale;
    ok = ok && good;
    const double score = std::max(orth, eq / scale);
    if (!good && score > worst.residual) worst = {p, score};
    imgs.push_back(std::move(t));
  }
  report.is_gamma = ok;
  if (ok) {
    report.representation = Representation(g, v.dim(), std::move(imgs));
  } else {
    report.failure_witness = worst;
  }
  return report;
}

std::vector<Matrix> equivariant_maps(const Representation& t, const Representation& u, const Tolerance& tol) {
  require_same_group(t, u);
  const int d = t.dim();
  const int e = u.dim();
  const auto tg = t.generator_images();
  const auto ug = u.generator_images();
  // vec(U R - R T) = (I (x) U - T^T (x) I) vec(R), column-major vec.
  Matrix a(static_cast<Eigen::Index>(tg.size()) * d * e, d * e);
  const Matrix id_d = Matrix::Identity(d, d);
  const Matrix id_e = Matrix::Identity(e, e);
  for (std::size_t k = 0; k < tg.size(); ++k) {
    Matrix block = Matrix::Zero(d * e, d * e);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        block.block(i * e, j * e, e, e) = id_d(i, j) * ug[k] - tg[k](j, i) * id_e;
      }
    }
    a.middleRows(static_cast<Eigen::Index>(k) * d * e, d * e) = block;
  }
  const Matrix ns = linalg::null_space(a, tol.eps, 1.0);
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    out.push_back(Eigen::Map<const Matrix>(ns.col(c).data(), e, d));
  }
  return out;
}

std::vector<Matrix> symmetric_commutant_basis(const Representation& t, const Tolerance& tol) {
  const int d = t.dim();
  std::vector<Matrix> sym;  // Frobenius-orthonormal basis of symmetric matrices
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Matrix s = Matrix::Zero(d, d);
      if (i == j) {
        s(i, i) = 1.0;
      } else {
        s(i, j) = s(j, i) = 1.0 / std::sqrt(2.0);
      }
      sym.push_back(std::move(s));
    }
  }
  const auto tg = t.generator_images();
  const Eigen::Index rows = static_cast<Eigen::Index>(tg.size()) * d * d;
  Matrix a(rows, static_cast<Eigen::Index>(sym.size()));
  for (std::size_t c = 0; c < sym.size(); ++c) {
    for (std::size_t k = 0; k < tg.size(); ++k) {
      const Matrix comm = sym[c] * tg[k] - tg[k] * sym[c];
      a.col(static_cast<Eigen::Index>(c)).segment(static_cast<Eigen::Index>(k) * d * d, d * d) =
          Eigen::Map<const Vector>(comm.data(), d * d);
    }
  }
  const Matrix ns = linalg::null_space(a, tol.eps, 1.0);
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    Matrix r = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < sym.size(); ++k) r += ns(static_cast<Eigen::Index>(k), c) * sym[k];
    out.push_back(std::move(r));
  }
  return out;
}

bool is_irreducible(const Representation& t, const Tolerance& tol) {
  if (t.dim() == 0) return false;
  return symmetric_commutant_basis(t, tol).size() == 1;
}

bool are_isomorphic(const Representation& t, const Representation& u, const Tolerance& tol) {
  require_same_group(t, u);
  if (!is_irreducible(t, tol) && !is_irreducible(u, tol)) {
    throw Error(ErrorKind::UnsupportedReducible, "isomorphy test needs an irreducible representation");
  }
  if (t.dim() != u.dim()) return false;
  return !equivariant_maps(t, u, tol).empty();
}

bool are_positively_isomorphic(const Representation& t, const Representation& u, const Tolerance& tol) {
  if (!are_isomorphic(t, u, tol)) return false;
  const int d = t.dim();
  if (d % 2 == 1) return true;
  const Matrix r = equivariant_maps(t, u, tol).front();
  const double det = r.determinant();
  if (std::abs(det) < std::pow(tol.eps, d)) {
    throw Error(ErrorKind::VerificationFailed, "equivariant map between irreducibles is numerically singular");
  }
  return det > 0.0;
}

Matrix orthogonal_equivariant_map(const Representation& t, const Representation& u, bool positive,
                                  const Tolerance& tol) {
  if (t.dim() != u.dim()) throw Error(ErrorKind::VerificationFailed, "representations have different dimension");
  const auto basis = equivariant_maps(t, u, tol);
  if (basis.empty()) throw Error(ErrorKind::VerificationFailed, "representations are not isomorphic");
  const int d = t.dim();
  const auto gens_t = t.generator_images();
  const auto gens_u = u.generator_images();
  for (const auto& b : basis) {
    Matrix r = linalg::polar_orthogonal(b);
    if (positive && r.determinant() < 0.0) {
      if (d % 2 == 0) continue;
      r = -r;
    }
    double resid = 0.0;
    for (std::size_t k = 0; k < gens_t.size(); ++k) {
      resid = std::max(resid, (r * gens_t[k] - gens_u[k] * r).norm());
    }
    if (resid > 10 * tol.eps * std::sqrt(static_cast<double>(d))) continue;
    return r;
  }
  throw Error(ErrorKind::VerificationFailed,
              positive ? "no orientation preserving orthogonal equivariant map"
                       : "no orthogonal equivariant map");
}

Matrix fixed_space(const Representation& t, const PermutationGroup& subgroup, const Tolerance& tol) {
  const int d = t.dim();
  Matrix avg = Matrix::Zero(d, d);
  for (const auto& h : subgroup.elements()) {
    const auto idx = t.group().index_of(h);
    if (!idx) {
      throw Error(ErrorKind::DimensionMismatch, h.to_cycle_string() + " is not an element of the represented group");
    }
    avg += t.image(*idx);
  }
  avg /= static_cast<double>(subgroup.order());
  const Matrix q = linalg::column_space(avg, tol.eps, 1.0);
  if (q.cols() == 0) return Matrix(d, 0);
  return linalg::canonical_basis(linalg::projector(q), static_cast<int>(q.cols()));
}

Arrangement construct_orbit_arrangement(const PermutationGroup& g, const Representation& t, const Vector& v1,
                                        const Tolerance& tol) {
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "orbit construction needs a transitive group");
  const auto phis = transversal(g, 0);
  return construct_orbit_arrangement(g, t, v1, phis, tol);
}

Arrangement construct_orbit_arrangement(const PermutationGroup& g, const Representation& t, const Vector& v1,
                                        std::span<const Permutation> phis, const Tolerance& tol) {
  if (!same_generators(g, t.group())) throw Error(ErrorKind::DimensionMismatch, "representation of another group");
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "orbit construction needs a transitive group");
  const int n = g.degree();
  const int d = t.dim();
  if (v1.size() != d) throw Error(ErrorKind::DimensionMismatch, "v1 has the wrong dimension");
  if (static_cast<int>(phis.size()) != n) throw Error(ErrorKind::DimensionMismatch, "need one phi_i per point");
  const double scale = std::max(1.0, v1.norm());
  const PermutationGroup stab = stabilizer(g, 0);
  for (const auto& h : stab.generators()) {
    if ((t.image(h) * v1 - v1).norm() > tol.eps * scale) {
      throw Error(ErrorKind::V1NotFixed, "v1 is moved by stabilizer element " + h.to_cycle_string());
    }
  }
  Matrix m(n, d);
  for (int i = 0; i < n; ++i) {
    const Permutation& phi = phis[static_cast<std::size_t>(i)];
    if (phi(0) != i) throw Error(ErrorKind::DimensionMismatch, "phi_i must map the first point to i");
    m.row(i) = (t.image(phi) * v1).transpose();
  }
  Arrangement v(std::move(m));
  const double resid = symmetry_residual(v, t);
  if (resid > 10 * tol.eps * std::max(1.0, v.matrix().norm())) {
    throw Error(ErrorKind::VerificationFailed, "orbit arrangement violates P M = M T by " + std::to_string(resid));
  }
  return v;
}

}  // namespace symarr
