#include "symarr/arrangement.hpp"

#include <cmath>
#include <string>

#include "symarr/errors.hpp"

namespace symarr {

Arrangement::Arrangement(Matrix points) : m_(std::move(points)) {
  if (m_.rows() < 1 || m_.cols() < 1) {
    throw Error(ErrorKind::DimensionMismatch, "an arrangement needs n >= 1 points in d >= 1 dimensions");
  }
  if (!m_.allFinite()) throw Error(ErrorKind::ParseError, "arrangement has non-finite coordinates");
}

Arrangement Arrangement::transformed(const Matrix& t) const {
  if (t.cols() != m_.cols()) throw Error(ErrorKind::DimensionMismatch, "transform has wrong width");
  return Arrangement(m_ * t.transpose());
}

ArrangementSpace ArrangementSpace::complement(const Tolerance& tol) const {
  return ArrangementSpace(linalg::orthogonal_complement(q_, tol.eps));
}

ArrangementSpace arrangement_space(const Arrangement& v, const Tolerance& tol) {
  return ArrangementSpace(linalg::column_space(v.matrix(), tol.eps));
}

std::optional<double> is_spherical(const Arrangement& v, const Tolerance& tol) {
  const Matrix g = v.matrix().transpose() * v.matrix();
  const double alpha = g.trace() / v.dim();
  if (alpha == 0.0) return std::nullopt;
  const double resid = (g - alpha * Matrix::Identity(v.dim(), v.dim())).norm();
  if (resid > tol.eps * g.norm()) return std::nullopt;
  return alpha;
}

bool is_normalized(const Arrangement& v, const Tolerance& tol) {
  const auto alpha = is_spherical(v, tol);
  return alpha && std::abs(*alpha - 1.0) <= tol.eps;
}

Arrangement normalize(const Arrangement& v, const Tolerance& tol) {
  const Matrix g = v.matrix().transpose() * v.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  const Vector& lam = es.eigenvalues();  // ascending
  const double smax = std::sqrt(std::max(lam(lam.size() - 1), 0.0));
  const double smin = std::sqrt(std::max(lam(0), 0.0));
  if (smax == 0.0 || smin <= tol.eps * smax) {
    throw Error(ErrorKind::RankDeficient, "normalization needs a full-dimensional arrangement");
  }
  const Vector inv = lam.array().rsqrt().matrix();
  return Arrangement(v.matrix() * es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose());
}

bool same_space(const ArrangementSpace& u, const ArrangementSpace& w, const Tolerance& tol) {
  if (u.ambient() != w.ambient() || u.rank() != w.rank()) return false;
  if (u.rank() == 0) return true;
  const double dist = (u.projector() - w.projector()).norm();
  return dist <= tol.eps * std::sqrt(2.0 * u.rank());
}

bool equivalent(const Arrangement& v, const Arrangement& w, const Tolerance& tol) {
  if (v.size() != w.size()) return false;
  return same_space(arrangement_space(v, tol), arrangement_space(w, tol), tol);
}

Matrix relating_transform(const Arrangement& v, const Arrangement& w, const Tolerance& tol) {
  if (!is_normalized(v, tol) || !is_normalized(w, tol)) {
    throw Error(ErrorKind::NotNormalized, "relating transform needs normalized arrangements");
  }
  if (v.size() != w.size() || v.dim() != w.dim() || !equivalent(v, w, tol)) {
    throw Error(ErrorKind::NotEquivalent, "arrangements do not share an arrangement space");
  }
  Matrix t = w.matrix().transpose() * v.matrix();
  const double orth = linalg::orthogonality_residual(t);
  const double map = (v.matrix() * t.transpose() - w.matrix()).norm();
  const double slack = tol.eps * std::sqrt(static_cast<double>(v.dim()));
  if (orth > 10 * slack || map > 10 * slack) {
    throw Error(ErrorKind::VerificationFailed,
                "relating transform residuals " + std::to_string(orth) + ", " + std::to_string(map));
  }
  return t;
}

double det_pair(const Arrangement& v, const Arrangement& w) {
  if (v.size() != w.size() || v.dim() != w.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "det_pair needs arrangements of equal shape");
  }
  return (w.matrix().transpose() * v.matrix()).determinant();
}

Arrangement direct_sum(const Arrangement& v, const Arrangement& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorKind::PointCountMismatch, "direct sum needs equal point counts");
  }
  Matrix m(v.size(), v.dim() + w.dim());
  m << v.matrix(), w.matrix();
  return Arrangement(std::move(m));
}

Matrix covariance(const Arrangement& v) {
  if (v.size() < 2) throw Error(ErrorKind::TooFewPoints, "covariance needs at least two points");
  return v.matrix().transpose() * v.matrix() / static_cast<double>(v.size() - 1);
}

Arrangement representative_from_space(const ArrangementSpace& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroSpace, "zero space has no representative");
  return Arrangement(u.basis());
}

}  // namespace symarr
