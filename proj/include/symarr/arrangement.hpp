#pragma once

#include <optional>

#include "symarr/linalg.hpp"
#include "symarr/tolerance.hpp"

namespace symarr {

/// n points in R^d, stored as the rows of the n x d arrangement matrix.
class Arrangement {
 public:
  /// Throws DimensionMismatch for an empty shape, ParseError for non-finite entries.
  explicit Arrangement(Matrix points);

  static Arrangement zero(int n, int d) { return Arrangement(Matrix::Zero(n, d)); }

  int size() const { return static_cast<int>(m_.rows()); }
  int dim() const { return static_cast<int>(m_.cols()); }
  const Matrix& matrix() const { return m_; }
  Vector point(int i) const { return m_.row(i).transpose(); }

  /// The arrangement with every point mapped through the linear map `t`.
  Arrangement transformed(const Matrix& t) const;

 private:
  Matrix m_;
};

/// Column span of an arrangement matrix, held as an orthonormal basis.
/// `rank() == 0` marks the space of a zero arrangement.
class ArrangementSpace {
 public:
  /// `basis` must have orthonormal columns (not re-checked here).
  explicit ArrangementSpace(Matrix basis) : q_(std::move(basis)) {}

  int ambient() const { return static_cast<int>(q_.rows()); }
  int rank() const { return static_cast<int>(q_.cols()); }
  bool is_zero() const { return q_.cols() == 0; }
  const Matrix& basis() const { return q_; }
  Matrix projector() const { return linalg::projector(q_); }
  ArrangementSpace complement(const Tolerance& tol = {}) const;

 private:
  Matrix q_;
};

ArrangementSpace arrangement_space(const Arrangement& v, const Tolerance& tol = {});

/// Returns alpha with M^T M = alpha I when the arrangement is spherical.
std::optional<double> is_spherical(const Arrangement& v, const Tolerance& tol = {});
bool is_normalized(const Arrangement& v, const Tolerance& tol = {});

/// M (M^T M)^{-1/2}: equivalent, normalized, continuous in v and compatible
/// with any orthogonal symmetry of v. Throws RankDeficient unless rank M = d.
Arrangement normalize(const Arrangement& v, const Tolerance& tol = {});

/// Same arrangement space, compared through orthogonal projectors.
bool equivalent(const Arrangement& v, const Arrangement& w, const Tolerance& tol = {});
bool same_space(const ArrangementSpace& u, const ArrangementSpace& w, const Tolerance& tol = {});

/// T = W^T M for normalized equivalent v, w; T is orthogonal and maps v onto w.
Matrix relating_transform(const Arrangement& v, const Arrangement& w, const Tolerance& tol = {});

/// det(W^T M).
double det_pair(const Arrangement& v, const Arrangement& w);

Arrangement direct_sum(const Arrangement& v, const Arrangement& w);

/// (1/(n-1)) sum v_i v_i^T.
Matrix covariance(const Arrangement& v);

/// Rows of the orthonormal basis: a normalized arrangement with space u.
Arrangement representative_from_space(const ArrangementSpace& u);

}  // namespace symarr
