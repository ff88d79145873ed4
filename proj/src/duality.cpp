#include "symarr/duality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "symarr/errors.hpp"

namespace symarr {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorKind::GroundTooLarge, "ground set of size " + std::to_string(n) + " exceeds 16");
  }
}

std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

enum class Verdict { Independent, Dependent };

struct Decision {
  Verdict verdict;
  bool near_singular;
};

Decision decide(const Matrix& a, int needed, double eps, double scale) {
  if (needed == 0) return {Verdict::Independent, false};
  if (a.cols() < needed || a.rows() < needed) return {Verdict::Dependent, false};
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double sigma = s.size() >= needed ? s(needed - 1) : 0.0;
  const double rel = scale > 0.0 ? sigma / scale : 0.0;
  const bool near = rel > eps && rel <= std::sqrt(eps);
  return {rel > eps ? Verdict::Independent : Verdict::Dependent, near};
}

template <class Decide>
Matroid enumerate(int n, int max_rank, Decide&& decide_subset) {
  check_ground(n);
  const std::uint32_t total = 1u << n;
  std::vector<bool> indep(total, false);
  std::vector<std::uint32_t> near;
  indep[0] = true;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (std::popcount(mask) > max_rank) continue;
    bool closed = true;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      if (!indep[mask & ~(rest & -rest)]) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    const Decision d = decide_subset(mask);
    indep[mask] = d.verdict == Verdict::Independent;
    if (d.near_singular) near.push_back(mask);
  }
  return Matroid(n, std::move(indep), std::move(near));
}

}  // namespace

Matroid::Matroid(int n, std::vector<bool> independent, std::vector<std::uint32_t> near_singular)
    : n_(n), independent_(std::move(independent)), near_singular_(std::move(near_singular)) {
  check_ground(n);
  const std::uint32_t total = 1u << n;
  if (independent_.size() != total) throw Error(ErrorKind::DimensionMismatch, "independence table has wrong size");
  if (!independent_[0]) throw Error(ErrorKind::ParseError, "empty set must be independent");
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (!independent_[mask]) continue;
    rank_ = std::max(rank_, std::popcount(mask));
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      if (!independent_[mask & ~(rest & -rest)]) {
        throw Error(ErrorKind::ParseError, "independent sets are not downward closed");
      }
    }
  }
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
  check_ground(n);
  const std::uint32_t total = 1u << n;
  std::vector<bool> indep(total, false);
  for (const auto& b : bases) {
    std::uint32_t mask = 0;
    for (int i : b) {
      if (i < 0 || i >= n) throw Error(ErrorKind::ParseError, "basis element out of range");
      mask |= 1u << i;
    }
    indep[mask] = true;
  }
  indep[0] = true;
  for (std::uint32_t mask = total; mask-- > 0;) {
    if (!indep[mask]) continue;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) indep[mask & ~(rest & -rest)] = true;
  }
  return Matroid(n, std::move(indep));
}

bool Matroid::is_independent(const std::vector<int>& subset) const {
  std::uint32_t mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= n_) return false;
    mask |= 1u << i;
  }
  return is_independent(mask);
}

std::vector<std::uint32_t> Matroid::independent_sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < independent_.size(); ++mask) {
    if (independent_[mask]) out.push_back(mask);
  }
  return out;
}

std::vector<std::vector<int>> Matroid::bases() const {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < independent_.size(); ++mask) {
    if (independent_[mask] && std::popcount(mask) == rank_) out.push_back(members(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> matroid_axiom_violations(const Matroid& m) {
  std::vector<std::string> out;
  if (!m.is_independent(0u)) out.emplace_back("empty set is dependent");
  const auto sets = m.independent_sets();
  for (std::uint32_t a : sets) {
    for (std::uint32_t rest = a; rest; rest &= rest - 1) {
      if (!m.is_independent(a & ~(rest & -rest))) {
        out.push_back("not downward closed at {" + std::to_string(a) + "}");
        break;
      }
    }
  }
  for (std::uint32_t a : sets) {
    for (std::uint32_t b : sets) {
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool found = false;
      for (std::uint32_t rest = b & ~a; rest && !found; rest &= rest - 1) {
        found = m.is_independent(a | (rest & -rest));
      }
      if (!found) {
        out.push_back("exchange fails for masks " + std::to_string(a) + " and " + std::to_string(b));
        return out;
      }
    }
  }
  return out;
}

Matroid matroid_of_space(const ArrangementSpace& u, const Tolerance& tol) {
  const int n = u.ambient();
  check_ground(n);
  const Matrix w = u.complement(tol).basis();
  const int c = static_cast<int>(w.cols());
  return enumerate(n, u.rank(), [&](std::uint32_t mask) {
    const auto idx = members(mask);
    const int k = static_cast<int>(idx.size());
    Matrix a = Matrix::Zero(n, k + c);
    for (int j = 0; j < k; ++j) a(idx[j], j) = 1.0;
    a.rightCols(c) = w;
    const double scale = k + c > 0 ? Eigen::JacobiSVD<Matrix>(a).singularValues()(0) : 0.0;
    return decide(a, k + c, tol.eps, scale);
  });
}

Matroid linear_matroid(const Arrangement& v, const Tolerance& tol) {
  const int n = v.size();
  check_ground(n);
  const Matrix& m = v.matrix();
  const double scale = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  return enumerate(n, v.dim(), [&](std::uint32_t mask) {
    const auto idx = members(mask);
    Matrix rows(static_cast<int>(idx.size()), v.dim());
    for (std::size_t j = 0; j < idx.size(); ++j) rows.row(static_cast<int>(j)) = m.row(idx[j]);
    return decide(rows.transpose(), static_cast<int>(idx.size()), tol.eps, scale);
  });
}

Matroid matroid_dual(const Matroid& m) {
  const int n = m.ground_size();
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::vector<int>> dual_bases;
  for (const auto& b : m.bases()) {
    std::uint32_t mask = 0;
    for (int i : b) mask |= 1u << i;
    dual_bases.push_back(members(full & ~mask));
  }
  return Matroid::from_bases(n, dual_bases);
}

Arrangement gale_dual(const Arrangement& v, const Tolerance& tol) {
  const ArrangementSpace u = arrangement_space(v, tol);
  if (u.rank() == 0 || u.rank() == u.ambient()) {
    throw Error(ErrorKind::DegenerateComplement,
                "rank " + std::to_string(u.rank()) + " of " + std::to_string(u.ambient()) + " has no proper complement");
  }
  return representative_from_space(u.complement(tol));
}

}  // namespace symarr
