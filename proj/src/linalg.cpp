#include "symarr/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace symarr::linalg {

Matrix column_space(const Matrix& a, double rel_eps, double scale_floor) {
  if (a.size() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  if (smax == 0.0) return Matrix(a.rows(), 0);
  const double thr = rel_eps * std::max(smax, scale_floor);
  int r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

int numerical_rank(const Matrix& a, double rel_eps, double abs_floor) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double thr = rel_eps * std::max(s(0), abs_floor);
  if (s(0) == 0.0) return 0;
  int r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return r;
}

Matrix null_space(const Matrix& a, double rel_eps, double scale_floor) {
  const Eigen::Index k = a.cols();
  if (a.rows() == 0) return Matrix::Identity(k, k);
  // Reduce tall systems to a k x k triangle first; the kernel is unchanged.
  Matrix reduced;
  if (a.rows() > k) {
    Eigen::HouseholderQR<Matrix> qr(a);
    reduced = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  } else {
    reduced = a;
  }
  Eigen::JacobiSVD<Matrix> svd(reduced, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  const double thr = rel_eps * std::max(smax, scale_floor);
  Eigen::Index first_null = 0;
  while (first_null < s.size() && s(first_null) > thr) ++first_null;
  return svd.matrixV().rightCols(k - first_null);
}

Matrix orthogonal_complement(const Matrix& q, double rel_eps) {
  const Eigen::Index n = q.rows();
  if (q.cols() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_eps * s(0)) ++r;
  return svd.matrixU().rightCols(n - r);
}

Matrix canonical_basis(const Matrix& proj, int rank) {
  const Eigen::Index n = proj.rows();
  Matrix basis(n, rank);
  Matrix residual = proj;
  for (int c = 0; c < rank; ++c) {
    Eigen::VectorXd norms = residual.colwise().norm();
    const double best = norms.maxCoeff();
    Eigen::Index pick = 0;
    while (norms(pick) < 0.5 * best) ++pick;
    Vector col = residual.col(pick) / norms(pick);
    // Second pass against earlier columns for numerical orthogonality.
    if (c > 0) {
      col -= basis.leftCols(c) * (basis.leftCols(c).transpose() * col);
      col.normalize();
    }
    basis.col(c) = col;
    residual -= col * (col.transpose() * residual);
  }
  return basis;
}

Matrix polar_orthogonal(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Matrix inverse_sqrt_spd(const Matrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  Vector inv = es.eigenvalues().array().rsqrt().matrix();
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace symarr::linalg
