#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symarr/linalg.hpp"

namespace symarr {

/// Bijection of {0, ..., n-1}. The C++ API is 0-based throughout; the text
/// formats (cycle / one-line notation) use 1-based labels.
class Permutation {
 public:
  Permutation() = default;
  /// images[j] = image of j. Throws InvalidPermutation unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Disjoint cycle notation with 1-based labels, e.g. "(1 2)(3 4)"; "()" for id.
  std::string to_cycle_string() const;

  /// Composition (a * b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Parses "(1 2)(3 4)", "(1,2,3)", "()" or one-line "[2,1,4,3]" on n points.
/// Whitespace is insignificant; cycles are composed right to left.
Permutation parse_permutation(std::string_view text, int n);

inline constexpr std::size_t kDefaultEnumerationCap = 20000;

/// Finite permutation group with its full element list.
///
/// Elements are sorted lexicographically by image array, so element 0 is the
/// identity. Each element carries a word over the generators (indices into
/// `generators()`) with element = g[w0] * g[w1] * ... ; representations use
/// it to compose element images. Copies share the immutable storage.
class PermutationGroup {
 public:
  PermutationGroup();

  int degree() const;
  std::size_t order() const;
  std::span<const Permutation> generators() const;
  std::span<const Permutation> elements() const;
  const Permutation& element(std::size_t i) const;
  std::span<const int> word(std::size_t i) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// True if every generator is the identity.
  bool is_trivial() const;

  friend PermutationGroup group_from_generators(std::vector<Permutation> gens, int n,
                                                std::size_t cap);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Breadth-first closure of `gens`. Throws InvalidPermutation for generators
/// on the wrong number of points, ClosureExceedsCap past `cap` elements.
PermutationGroup group_from_generators(std::vector<Permutation> gens, int n,
                                       std::size_t cap = kDefaultEnumerationCap);

/// Column convention P e_j = e_{p(j)}, hence P_a P_b = P_{a*b} and row i of
/// P M is row p^{-1}(i) of M.
Matrix permutation_matrix(const Permutation& p);

/// Subgroup built from an explicit element list (closed under composition),
/// with a greedily chosen generating set.
PermutationGroup subgroup_from_elements(const PermutationGroup& g,
                                        const std::vector<Permutation>& elements);

PermutationGroup stabilizer(const PermutationGroup& g, int point);

std::vector<int> orbit(const PermutationGroup& g, int point);
std::vector<std::vector<int>> orbits(const PermutationGroup& g);
bool is_transitive(const PermutationGroup& g);

/// For every point i the first element (in element order) mapping base to i.
/// Throws NotTransitive if some point is unreachable.
std::vector<Permutation> transversal(const PermutationGroup& g, int base);

}  // namespace symarr
