#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symarr/decomposition.hpp"

namespace symarr {

/// Which result decided deformation equivalence in a RelationReport.
enum class DeformationRule {
  EvenTheorem,           // even d: d-eq iff positively isomorphic
  EvenMirrorCorollary,   // even d, equivalent with opposite orientation: never d-eq
  OddFlexibleTheorem,    // odd d, both flexible: d-eq iff isomorphic
  OddRigid,              // odd d, both rigid: d-eq iff positively equivalent
  MixedRigidity,         // one rigid, one flexible: representations differ, not d-eq
};

std::string_view to_string(DeformationRule rule);

struct RelationReport {
  bool eq = false;
  bool eq_plus = false;
  bool iso = false;
  bool iso_plus = false;
  bool d_eq = false;
  int dim = 0;
  bool rigid_first = false;
  bool rigid_second = false;
  DeformationRule rule = DeformationRule::EvenTheorem;
  std::string justification;

  bool even() const { return dim % 2 == 0; }
};

/// Arrows of the implication diagram between eq, eq+, iso, iso+ and d-eq
/// (unconditional and conditional) that the report violates; empty if none.
std::vector<std::string> implication_violations(const RelationReport& r);

/// The five relations for two normalized irreducible arrangements of the
/// decomposition's group. d-eq is decided by theorem dispatch, not search.
RelationReport classify_pair(const Arrangement& v, const Arrangement& w, const Decomposition& dec,
                             const Tolerance& tol = {});

/// Rigid iff the arrangement space cannot move within the invariant
/// subspaces: for irreducible v, multiplicity of its isotype is 1. Reducible
/// input is accepted: rigid iff the space meets every isotypic component
/// either trivially or fully.
bool is_rigid(const Arrangement& v, const Decomposition& dec, const Tolerance& tol = {});

/// Whether v can be deformed into a mirror image: never in even dimension,
/// exactly when flexible in odd dimension.
bool mirror_deformable(const Arrangement& v, const Decomposition& dec, const Tolerance& tol = {});

/// t -> exp(t log R) at t = k/steps, k = 0..steps, from the real Schur form
/// of R (rotation blocks with scaled angles, paired -1 eigenvalues as
/// angle-pi blocks). Throws NotSpecialOrthogonal unless R is in SO(d).
std::vector<Matrix> so_path(const Matrix& r, int steps, const Tolerance& tol = {});

inline constexpr int kDefaultSteps = 64;
inline constexpr double kPathTolerance = 1e-6;

struct PathSample {
  double t = 0.0;
  Arrangement points;
  double normalization_residual = 0.0;  // ||M^T M - I||_F
  double symmetry_residual = 0.0;       // max_g ||P_g M - M T_g||_F, T_g = M^T P_g M
  double det_to_start = 0.0;            // det_pair(first sample, this sample)
};

struct DeformationPath {
  PermutationGroup group;
  std::vector<std::string> legs;
  std::vector<PathSample> samples;
  /// Largest Frobenius distance between consecutive samples.
  double max_step = 0.0;
  /// Largest |delta det_to_start| / delta t between consecutive samples.
  double det_lipschitz = 0.0;
};

/// Explicit deformation between deformation equivalent v and w, sampled with
/// `steps` intervals per leg and verified sample by sample:
///  - positively equivalent: one rotation leg;
///  - not equivalent: normalized straight-line leg to a re-oriented copy of
///    w with the representation of v, then a rotation leg onto w;
///  - equivalent, opposite orientation (odd d, flexible): the previous case
///    twice, through an intermediate arrangement rotated towards an
///    orthogonal copy of the same constituent by a seeded angle.
/// Throws NotDeformationEquivalent with the deciding rule otherwise.
DeformationPath build_deformation(const Arrangement& v, const Arrangement& w, const Decomposition& dec,
                                  int steps = kDefaultSteps, std::uint64_t seed = 0, const Tolerance& tol = {});

struct CountBound {
  std::size_t count = 0;  // isotype classes with constituent dimension >= d
  double bound = 0.0;     // n / d
  bool ok = false;
};

CountBound count_bound_check(const Decomposition& dec, int d);

}  // namespace symarr
