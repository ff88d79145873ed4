#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "symarr/arrangement.hpp"
#include "symarr/permgroup.hpp"

namespace symarr {

/// Orthogonal representation of a permutation group, fixed by the images of
/// its generators. Element images are composed along the group's stored
/// words on first use and cached; the cache is shared by copies and safe
/// for concurrent readers.
class Representation {
 public:
  /// Throws DimensionMismatch unless there is one dim x dim image per generator.
  Representation(PermutationGroup group, int dim, std::vector<Matrix> generator_images);

  /// Every generator acting as the identity of R^dim.
  static Representation trivial(const PermutationGroup& group, int dim);

  /// phi -> P_phi on R^n.
  static Representation permutation(const PermutationGroup& group);

  const PermutationGroup& group() const { return group_; }
  int dim() const { return dim_; }
  std::span<const Matrix> generator_images() const { return gens_; }

  const Matrix& image(std::size_t element_index) const;
  const Matrix& image(const Permutation& p) const;

 private:
  struct Cache;
  PermutationGroup group_;
  std::vector<Matrix> gens_;
  int dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// max over generators of ||T^T T - I||_F.
double orthogonality_residual(const Representation& t);
/// max over all element pairs of ||T_a T_b - T_{a*b}||_F.
double homomorphism_residual(const Representation& t);
/// max over generators of ||P_g M - M T_g||_F.
double symmetry_residual(const Arrangement& v, const Representation& t);

double invariance_residual(const ArrangementSpace& u, const PermutationGroup& g);
bool is_invariant_space(const ArrangementSpace& u, const PermutationGroup& g, const Tolerance& tol = {});

/// T_g = M^T P_g M for a normalized arrangement with invariant space.
Representation extract_representation(const Arrangement& v, const PermutationGroup& g,
                                      const Tolerance& tol = {});

/// The representation g -> P_g restricted to the invariant subspace u, in
/// the coordinates of u's orthonormal basis.
Representation restricted_representation(const ArrangementSpace& u, const PermutationGroup& g,
                                         const Tolerance& tol = {});

struct FailureWitness {
  Permutation generator;
  double residual = 0.0;
};

struct SymmetryReport {
  bool is_gamma = false;
  std::optional<Representation> representation;
  bool is_invariant_space = false;
  bool is_spherical = false;
  std::optional<FailureWitness> failure_witness;
};

/// Spherical input: decided by invariance of the arrangement space. Non
/// spherical full-dimensional input: T_g = M^+ P_g M must be orthogonal and
/// satisfy P_g M = M T_g. Rank-deficient non-spherical input is rejected
/// with UnsupportedRankDeficient (its representation need not be unique).
SymmetryReport is_gamma_arrangement(const Arrangement& v, const PermutationGroup& g,
                                    const Tolerance& tol = {});

/// Frobenius-orthonormal basis of {R : R T_g = U_g R for all generators g},
/// R of shape u.dim() x t.dim().
std::vector<Matrix> equivariant_maps(const Representation& t, const Representation& u,
                                     const Tolerance& tol = {});

std::vector<Matrix> symmetric_commutant_basis(const Representation& t, const Tolerance& tol = {});

/// Real irreducibility: the symmetric commutant is spanned by the identity.
bool is_irreducible(const Representation& t, const Tolerance& tol = {});

/// Both require at least one irreducible argument (UnsupportedReducible).
bool are_isomorphic(const Representation& t, const Representation& u, const Tolerance& tol = {});
bool are_positively_isomorphic(const Representation& t, const Representation& u,
                               const Tolerance& tol = {});

/// Orthogonal R with R T_g = U_g R; with `positive`, det R = +1 as well.
/// Throws VerificationFailed if no such map exists.
Matrix orthogonal_equivariant_map(const Representation& t, const Representation& u, bool positive,
                                  const Tolerance& tol = {});

/// Orthonormal basis (columns) of {x : T_h x = x for all h in subgroup}.
Matrix fixed_space(const Representation& t, const PermutationGroup& subgroup, const Tolerance& tol = {});

/// v_i = T_{phi_i} v1 with phi_i from `transversal(g, 0)`.
Arrangement construct_orbit_arrangement(const PermutationGroup& g, const Representation& t,
                                        const Vector& v1, const Tolerance& tol = {});
/// Same construction with an explicit choice of phi_i (phi_i(0) = i).
Arrangement construct_orbit_arrangement(const PermutationGroup& g, const Representation& t,
                                        const Vector& v1, std::span<const Permutation> phis,
                                        const Tolerance& tol = {});

}  // namespace symarr
