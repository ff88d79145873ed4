#pragma once

#include <Eigen/Dense>

namespace symarr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace linalg {

/// Orthonormal basis of the column space of `a`. Singular values at or below
/// `rel_eps * max(sigma_max, scale_floor)` count as zero. A zero matrix
/// yields an n x 0 basis.
Matrix column_space(const Matrix& a, double rel_eps, double scale_floor = 0.0);

int numerical_rank(const Matrix& a, double rel_eps, double abs_floor = 0.0);

/// Orthonormal basis (as columns) of {x : a x = 0}. The threshold is
/// `rel_eps * max(sigma_max, scale_floor)`, so an all-zero operator has the
/// whole domain as its kernel instead of a degenerate empty threshold.
Matrix null_space(const Matrix& a, double rel_eps, double scale_floor = 1.0);

/// Orthonormal basis of the orthogonal complement of span(q), q orthonormal.
Matrix orthogonal_complement(const Matrix& q, double rel_eps);

inline Matrix projector(const Matrix& q) { return q * q.transpose(); }

/// Basis depending only on the subspace: pivoted Gram-Schmidt over the columns
/// of the orthogonal projector, preferring low indices. `rank` columns.
Matrix canonical_basis(const Matrix& proj, int rank);

/// Orthogonal polar factor U V^T of a square matrix.
Matrix polar_orthogonal(const Matrix& a);

/// (G)^{-1/2} for symmetric positive definite G via eigendecomposition.
Matrix inverse_sqrt_spd(const Matrix& g);

inline double orthogonality_residual(const Matrix& t) {
  return (t.transpose() * t - Matrix::Identity(t.cols(), t.cols())).norm();
}

}  // namespace linalg
}  // namespace symarr
