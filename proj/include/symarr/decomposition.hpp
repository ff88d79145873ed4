#pragma once

#include <cstdint>
#include <vector>

#include "symarr/symmetry.hpp"

namespace symarr {

/// Splitting of R^n under g -> P_g into pairwise orthogonal irreducible
/// invariant subspaces, grouped into isomorphism classes (isotypes).
struct Decomposition {
  PermutationGroup group;
  /// Descending dimension, then by rounded projector entries.
  std::vector<ArrangementSpace> subspaces;
  /// g -> P_g restricted to each subspace, in that subspace's basis.
  std::vector<Representation> representations;
  /// Partition of subspace indices; classes ordered by their first member.
  std::vector<std::vector<std::size_t>> isotypes;
  std::vector<std::size_t> multiplicities;
  /// Seed of the successful attempt and every seed tried, in order.
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seed_trail;

  std::size_t isotype_of(std::size_t subspace) const;
  /// Orthogonal projector onto the isotypic component of class k.
  Matrix isotypic_projector(std::size_t k) const;
};

inline constexpr int kDecompositionRetries = 10;

/// Random element of the symmetric commutant of g -> P_g, eigenspaces as
/// candidate constituents, retry with seed + 1 while any candidate is
/// reducible. Throws DecompositionFailed after kDecompositionRetries retries.
Decomposition decompose_permutation_representation(const PermutationGroup& g, std::uint64_t seed = 0,
                                                   const Tolerance& tol = {});

/// Index of the isotype class whose constituents are isomorphic to u.
/// Throws NotInvariant / NotIrreducible for unsuitable u.
std::size_t isotype_index_of(const ArrangementSpace& u, const Decomposition& d, const Tolerance& tol = {});

std::size_t multiplicity_of(const ArrangementSpace& u, const Decomposition& d, const Tolerance& tol = {});

/// One normalized arrangement per constituent of class k, re-oriented so
/// that all of them have exactly the representation of the first one.
std::vector<Arrangement> aligned_constituents(const Decomposition& d, std::size_t k, const Tolerance& tol = {});

}  // namespace symarr
