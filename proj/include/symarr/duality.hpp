#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symarr/arrangement.hpp"

namespace symarr {

inline constexpr int kMaxGroundSize = 16;

/// Matroid on {0..n-1} stored as the explicit family of independent sets,
/// one flag per subset bitmask.
class Matroid {
 public:
  /// Throws GroundTooLarge for n > 16. `independent` has 2^n entries and must
  /// contain the empty set and be downward closed.
  Matroid(int n, std::vector<bool> independent, std::vector<std::uint32_t> near_singular = {});

  /// Independent sets are the subsets of the given bases (0-based indices).
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  bool is_independent(std::uint32_t mask) const { return independent_.at(mask); }
  bool is_independent(const std::vector<int>& subset) const;

  std::vector<std::uint32_t> independent_sets() const;
  /// Bases as sorted 0-based index lists in lexicographic order.
  std::vector<std::vector<int>> bases() const;

  /// Subsets whose independence was decided with smallest singular value
  /// inside (eps, sqrt(eps)] relative to the largest; informational only.
  const std::vector<std::uint32_t>& near_singular() const { return near_singular_; }

  bool operator==(const Matroid& other) const { return n_ == other.n_ && independent_ == other.independent_; }

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<bool> independent_;
  std::vector<std::uint32_t> near_singular_;
};

/// Violated matroid axioms (empty set, downward closure, exchange); empty if
/// none. The exchange property is checked exhaustively.
std::vector<std::string> matroid_axiom_violations(const Matroid& m);

/// I independent iff span{e_i : i in I} meets the complement of U trivially.
Matroid matroid_of_space(const ArrangementSpace& u, const Tolerance& tol = {});

/// I independent iff the points indexed by I are linearly independent.
Matroid linear_matroid(const Arrangement& v, const Tolerance& tol = {});

/// Bases of the dual are the complements of the bases.
Matroid matroid_dual(const Matroid& m);

/// An arrangement whose space is the orthogonal complement of that of v.
/// Throws DegenerateComplement when rank v is 0 or n.
Arrangement gale_dual(const Arrangement& v, const Tolerance& tol = {});

}  // namespace symarr
