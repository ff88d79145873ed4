#include "symarr/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "symarr/errors.hpp"

namespace symarr {

std::string_view to_string(DeformationRule rule) {
  switch (rule) {
    case DeformationRule::EvenTheorem: return "even-d theorem";
    case DeformationRule::EvenMirrorCorollary: return "even-d corollary";
    case DeformationRule::OddFlexibleTheorem: return "odd-d flexible theorem";
    case DeformationRule::OddRigid: return "odd-d rigid";
    case DeformationRule::MixedRigidity: return "mixed rigidity";
  }
  return "?";
}

std::vector<std::string> implication_violations(const RelationReport& r) {
  std::vector<std::string> out;
  auto arrow = [&](bool premise, bool conclusion, const char* name) {
    if (premise && !conclusion) out.emplace_back(name);
  };
  const bool rigid = r.rigid_first || r.rigid_second;
  const bool flexible = !r.rigid_first || !r.rigid_second;
  arrow(r.eq_plus, r.eq, "eq+ => eq");
  arrow(r.iso_plus, r.iso, "iso+ => iso");
  arrow(r.eq_plus, r.d_eq, "eq+ => d-eq");
  arrow(r.eq, r.iso, "eq => iso");
  arrow(r.eq_plus, r.iso_plus, "eq+ => iso+");
  arrow(r.d_eq, r.iso_plus, "d-eq => iso+");
  if (r.even()) arrow(r.iso_plus, r.d_eq, "iso+ => d-eq (even d)");
  if (flexible) arrow(r.iso_plus, r.d_eq, "iso+ => d-eq (flexible)");
  if (rigid) arrow(r.d_eq, r.eq_plus, "d-eq => eq+ (rigid)");
  if (rigid) arrow(r.iso, r.eq, "iso => eq (rigid)");
  if (!r.even()) arrow(r.iso, r.iso_plus, "iso => iso+ (odd d)");
  if (r.even() && rigid) arrow(r.iso_plus, r.eq_plus, "iso+ => eq+ (even d, rigid)");
  return out;
}

namespace {

void require_gamma_normalized(const Arrangement& v, const Decomposition& dec, const Tolerance& tol,
                              const char* which) {
  if (v.size() != dec.group.degree()) {
    throw Error(ErrorKind::PointCountMismatch, std::string(which) + " arrangement size differs from group degree");
  }
  if (!is_normalized(v, tol)) throw Error(ErrorKind::NotNormalized, std::string(which) + " arrangement");
  if (!is_invariant_space(arrangement_space(v, tol), dec.group, tol)) {
    throw Error(ErrorKind::NotGammaArrangement, std::string(which) + " arrangement space is not invariant");
  }
}

}  // namespace

bool is_rigid(const Arrangement& v, const Decomposition& dec, const Tolerance& tol) {
  const ArrangementSpace u = arrangement_space(v, tol);
  if (u.ambient() != dec.group.degree()) throw Error(ErrorKind::PointCountMismatch, "size differs from group degree");
  if (u.is_zero() || !is_invariant_space(u, dec.group, tol)) {
    throw Error(ErrorKind::NotInvariant, "arrangement space is not a non-zero invariant subspace");
  }
  const Representation rep = restricted_representation(u, dec.group, tol);
  if (is_irreducible(rep, tol)) return multiplicity_of(u, dec, tol) == 1;
  const Matrix pu = u.projector();
  for (std::size_t k = 0; k < dec.isotypes.size(); ++k) {
    const Matrix pk = dec.isotypic_projector(k);
    const double meet = (pu * pk).trace();
    const double full = pk.trace();
    if (meet > 0.5 && meet < full - 0.5) return false;
  }
  return true;
}

bool mirror_deformable(const Arrangement& v, const Decomposition& dec, const Tolerance& tol) {
  const ArrangementSpace u = arrangement_space(v, tol);
  if (u.is_zero() || !is_invariant_space(u, dec.group, tol)) {
    throw Error(ErrorKind::NotInvariant, "arrangement space is not a non-zero invariant subspace");
  }
  if (!is_irreducible(restricted_representation(u, dec.group, tol), tol)) {
    throw Error(ErrorKind::NotIrreducible, "arrangement space is reducible");
  }
  if (v.dim() % 2 == 0) return false;
  return !is_rigid(v, dec, tol);
}

RelationReport classify_pair(const Arrangement& v, const Arrangement& w, const Decomposition& dec,
                             const Tolerance& tol) {
  if (v.dim() != w.dim()) throw Error(ErrorKind::DimensionMismatch, "arrangements have different dimension");
  require_gamma_normalized(v, dec, tol, "first");
  require_gamma_normalized(w, dec, tol, "second");
  const Representation tv = extract_representation(v, dec.group, tol);
  const Representation tw = extract_representation(w, dec.group, tol);
  if (!is_irreducible(tv, tol)) throw Error(ErrorKind::NotIrreducible, "first arrangement is reducible");
  if (!is_irreducible(tw, tol)) throw Error(ErrorKind::NotIrreducible, "second arrangement is reducible");

  RelationReport r;
  r.dim = v.dim();
  r.eq = equivalent(v, w, tol);
  r.eq_plus = r.eq && relating_transform(v, w, tol).determinant() > 0.0;
  r.iso = are_isomorphic(tv, tw, tol);
  r.iso_plus = r.iso && are_positively_isomorphic(tv, tw, tol);
  r.rigid_first = is_rigid(v, dec, tol);
  r.rigid_second = is_rigid(w, dec, tol);

  if (r.even()) {
    r.d_eq = r.iso_plus;
    if (r.eq && !r.eq_plus) {
      r.rule = DeformationRule::EvenMirrorCorollary;
      r.justification = "even-d corollary: an arrangement and its mirror image are not deformation equivalent";
    } else {
      r.rule = DeformationRule::EvenTheorem;
      r.justification = "even-d theorem: deformation equivalent iff positively isomorphic";
    }
  } else if (r.rigid_first != r.rigid_second) {
    r.d_eq = false;
    r.rule = DeformationRule::MixedRigidity;
    r.justification = "mixed rigidity: one arrangement is rigid and the other flexible, so they are not isomorphic";
  } else if (!r.rigid_first) {
    r.d_eq = r.iso;
    r.rule = DeformationRule::OddFlexibleTheorem;
    r.justification = "odd-d flexible theorem: deformation equivalent iff isomorphic";
  } else {
    r.d_eq = r.eq_plus;
    r.rule = DeformationRule::OddRigid;
    r.justification = "rigidity: deformation equivalent iff positively equivalent";
  }
  return r;
}

std::vector<Matrix> so_path(const Matrix& r, int steps, const Tolerance& tol) {
  if (steps < 1) throw Error(ErrorKind::VerificationFailed, "steps must be positive");
  if (r.rows() != r.cols() || r.rows() == 0) throw Error(ErrorKind::NotSpecialOrthogonal, "matrix is not square");
  const int d = static_cast<int>(r.rows());
  const double slack = std::max(10 * tol.eps * std::sqrt(static_cast<double>(d)), 1e-12);
  if (linalg::orthogonality_residual(r) > std::max(slack, 1e-8)) {
    throw Error(ErrorKind::NotSpecialOrthogonal, "matrix is not orthogonal");
  }
  if (r.determinant() < 0.0) throw Error(ErrorKind::NotSpecialOrthogonal, "matrix has determinant -1");

  Eigen::RealSchur<Matrix> schur(r);
  const Matrix& z = schur.matrixU();
  const Matrix& s = schur.matrixT();

  struct Block {
    int i, j;
    double angle;
  };
  std::vector<Block> blocks;
  std::vector<int> negatives;
  for (int i = 0; i < d;) {
    if (i + 1 < d && s(i + 1, i) != 0.0) {
      blocks.push_back({i, i + 1, std::atan2(s(i + 1, i) - s(i, i + 1), s(i, i) + s(i + 1, i + 1))});
      i += 2;
    } else {
      if (s(i, i) < 0.0) negatives.push_back(i);
      i += 1;
    }
  }
  if (negatives.size() % 2 != 0) throw Error(ErrorKind::NotSpecialOrthogonal, "odd number of -1 eigenvalues");
  for (std::size_t k = 0; k < negatives.size(); k += 2) {
    blocks.push_back({negatives[k], negatives[k + 1], std::numbers::pi});
  }

  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    Matrix b = Matrix::Identity(d, d);
    for (const auto& blk : blocks) {
      const double c = std::cos(t * blk.angle);
      const double sn = std::sin(t * blk.angle);
      b(blk.i, blk.i) = c;
      b(blk.j, blk.j) = c;
      b(blk.j, blk.i) = sn;
      b(blk.i, blk.j) = -sn;
    }
    out.push_back(z * b * z.transpose());
  }
  out.front() = Matrix::Identity(d, d);
  if ((out.back() - r).norm() > 1e-8) {
    throw Error(ErrorKind::VerificationFailed, "rotation path does not reach its endpoint");
  }
  return out;
}

namespace {

using Leg = std::vector<Matrix>;

Leg rotation_leg(const Arrangement& from, const Matrix& q, int steps, const Tolerance& tol) {
  Leg leg;
  for (const Matrix& s : so_path(q, steps, tol)) leg.push_back(from.matrix() * s.transpose());
  return leg;
}

Leg linear_leg(const Matrix& a, const Matrix& b, int steps) {
  const int d = static_cast<int>(a.cols());
  Leg leg;
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    const Matrix m = (1.0 - t) * a + t * b;
    const Matrix gram = m.transpose() * m;
    const double alpha = gram.trace() / d;
    if (!(alpha > 1e-12) || (gram - alpha * Matrix::Identity(d, d)).norm() > 1e-8 * alpha) {
      throw Error(ErrorKind::PathVerificationFailed, "straight-line leg leaves the spherical arrangements");
    }
    leg.push_back(m / std::sqrt(alpha));
  }
  return leg;
}

// Deforms a (representation ta) into b (representation tb), with ta and tb
// positively isomorphic.
std::vector<Leg> isomorphic_legs(const Arrangement& a, const Representation& ta, const Arrangement& b,
                                 const Representation& tb, int steps, const Tolerance& tol,
                                 std::vector<std::string>& names) {
  const Matrix r = orthogonal_equivariant_map(tb, ta, true, tol);
  const Arrangement aligned = b.transformed(r);
  std::vector<Leg> legs;
  legs.push_back(linear_leg(a.matrix(), aligned.matrix(), steps));
  names.emplace_back("linear");
  const int d = a.dim();
  if ((r - Matrix::Identity(d, d)).norm() > kPathTolerance) {
    legs.push_back(rotation_leg(aligned, r.transpose(), steps, tol));
    names.emplace_back("rotation");
  }
  return legs;
}

Arrangement intermediate(const Arrangement& v, const Representation& tv, const Decomposition& dec,
                         std::uint64_t seed, const Tolerance& tol) {
  const ArrangementSpace u = arrangement_space(v, tol);
  const std::size_t k = isotype_index_of(u, dec, tol);
  const Representation& target = dec.representations[dec.isotypes[k].front()];
  const Matrix r = orthogonal_equivariant_map(target, tv, false, tol);
  const int n = v.size();
  const int d = v.dim();
  const Matrix off = Matrix::Identity(n, n) - v.matrix() * v.matrix().transpose();
  Matrix best;
  double best_alpha = -1.0;
  for (const Arrangement& w : aligned_constituents(dec, k, tol)) {
    const Matrix perp = off * w.transformed(r).matrix();
    const double alpha = perp.squaredNorm() / d;
    if (alpha > best_alpha) {
      best_alpha = alpha;
      best = perp;
    }
  }
  if (best_alpha < kPathTolerance) {
    throw Error(ErrorKind::PathVerificationFailed, "no constituent orthogonal to the arrangement space");
  }
  const Matrix wperp = best / std::sqrt(best_alpha);
  std::mt19937_64 rng(seed);
  const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double theta = (0.25 + 0.5 * u01) * std::numbers::pi / 2.0;
  return Arrangement(std::cos(theta) * v.matrix() + std::sin(theta) * wperp);
}

}  // namespace

DeformationPath build_deformation(const Arrangement& v, const Arrangement& w, const Decomposition& dec, int steps,
                                  std::uint64_t seed, const Tolerance& tol) {
  if (steps < 1) throw Error(ErrorKind::VerificationFailed, "steps must be positive");
  const RelationReport rel = classify_pair(v, w, dec, tol);
  if (!rel.d_eq) throw Error(ErrorKind::NotDeformationEquivalent, rel.justification);

  const Representation tv = extract_representation(v, dec.group, tol);
  const Representation tw = extract_representation(w, dec.group, tol);
  std::vector<Leg> legs;
  DeformationPath path{dec.group, {}, {}, 0.0, 0.0};
  if (rel.eq_plus) {
    legs.push_back(rotation_leg(v, relating_transform(v, w, tol), steps, tol));
    path.legs.emplace_back("rotation");
  } else if (!rel.eq) {
    legs = isomorphic_legs(v, tv, w, tw, steps, tol, path.legs);
  } else {
    const Arrangement mid = intermediate(v, tv, dec, seed, tol);
    legs = isomorphic_legs(v, tv, mid, tv, steps, tol, path.legs);
    auto rest = isomorphic_legs(mid, tv, w, tw, steps, tol, path.legs);
    for (auto& leg : rest) legs.push_back(std::move(leg));
  }

  const int d = v.dim();
  const auto& gens = dec.group.generators();
  std::vector<Matrix> perms;
  for (const auto& g : gens) perms.push_back(permutation_matrix(g));
  const double nlegs = static_cast<double>(legs.size());
  for (std::size_t l = 0; l < legs.size(); ++l) {
    for (std::size_t k = (l == 0 ? 0 : 1); k < legs[l].size(); ++k) {
      const Matrix& m = legs[l][k];
      PathSample s{(static_cast<double>(l) + static_cast<double>(k) / steps) / nlegs, Arrangement(m), 0.0, 0.0,
                   0.0};
      s.normalization_residual = (m.transpose() * m - Matrix::Identity(d, d)).norm();
      for (const Matrix& p : perms) {
        const Matrix t = m.transpose() * p * m;
        s.symmetry_residual = std::max(s.symmetry_residual, (p * m - m * t).norm());
      }
      s.det_to_start = (m.transpose() * v.matrix()).determinant();
      if (s.normalization_residual > kPathTolerance || s.symmetry_residual > kPathTolerance) {
        throw Error(ErrorKind::PathVerificationFailed,
                    "sample at t=" + std::to_string(s.t) + " fails normalization or symmetry");
      }
      path.samples.push_back(std::move(s));
    }
  }
  path.samples.back().t = 1.0;
  if ((path.samples.front().points.matrix() - v.matrix()).norm() > kPathTolerance ||
      (path.samples.back().points.matrix() - w.matrix()).norm() > kPathTolerance) {
    throw Error(ErrorKind::PathVerificationFailed, "path endpoints do not match the input arrangements");
  }
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    const auto& a = path.samples[i - 1];
    const auto& b = path.samples[i];
    path.max_step = std::max(path.max_step, (b.points.matrix() - a.points.matrix()).norm());
    path.det_lipschitz = std::max(path.det_lipschitz, std::abs(b.det_to_start - a.det_to_start) / (b.t - a.t));
  }
  return path;
}

CountBound count_bound_check(const Decomposition& dec, int d) {
  CountBound out;
  for (const auto& members : dec.isotypes) {
    if (dec.subspaces[members.front()].rank() >= d) ++out.count;
  }
  out.bound = static_cast<double>(dec.group.degree()) / d;
  out.ok = static_cast<double>(out.count) <= out.bound;
  return out;
}

}  // namespace symarr
