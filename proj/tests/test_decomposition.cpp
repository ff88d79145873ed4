#include <gtest/gtest.h>

#include "expect.hpp"
#include "fixtures.hpp"

using namespace symarr;

namespace {

std::vector<int> dims(const Decomposition& d) {
  std::vector<int> out;
  for (const auto& s : d.subspaces) out.push_back(s.rank());
  return out;
}

}  // namespace

TEST(Decompose, TrivialGroup) {
  const auto d = decompose_permutation_representation(fx::trivial(2), 0);
  EXPECT_EQ(dims(d), (std::vector<int>{1, 1}));
  ASSERT_EQ(d.isotypes.size(), 1u);
  EXPECT_EQ(d.multiplicities, (std::vector<std::size_t>{2}));
}

TEST(Decompose, KleinFourCharacterBasis) {
  const auto d = decompose_permutation_representation(fx::klein(), 0);
  ASSERT_EQ(d.subspaces.size(), 4u);
  EXPECT_EQ(d.multiplicities, (std::vector<std::size_t>{1, 1, 1, 1}));
  const std::vector<Eigen::Vector4d> chars = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (const auto& c : chars) {
    int hits = 0;
    for (const auto& s : d.subspaces) hits += std::abs(s.basis().col(0).dot(c) / 2.0) > 1.0 - 1e-9;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Decompose, CyclicThree) {
  const auto d = decompose_permutation_representation(fx::c3(), 0);
  auto ds = dims(d);
  std::sort(ds.begin(), ds.end());
  EXPECT_EQ(ds, (std::vector<int>{1, 2}));
  EXPECT_EQ(d.multiplicities, (std::vector<std::size_t>{1, 1}));
}

TEST(Decompose, InvariantsOnAllGroups) {
  for (const auto& [name, g] : fx::all_groups()) {
    const auto d = decompose_permutation_representation(g, 7);
    const int n = g.degree();
    Matrix sum = Matrix::Zero(n, n);
    int total = 0;
    for (std::size_t i = 0; i < d.subspaces.size(); ++i) {
      const auto& s = d.subspaces[i];
      sum += s.projector();
      total += s.rank();
      EXPECT_TRUE(is_invariant_space(s, g)) << name;
      EXPECT_TRUE(is_irreducible(d.representations[i])) << name;
      for (std::size_t j = i + 1; j < d.subspaces.size(); ++j) {
        EXPECT_LT((s.projector() * d.subspaces[j].projector()).norm(), 1e-8) << name;
      }
    }
    EXPECT_EQ(total, n) << name;
    EXPECT_LT((sum - Matrix::Identity(n, n)).norm(), 1e-8) << name;
    for (std::size_t a = 0; a < d.isotypes.size(); ++a) {
      EXPECT_EQ(d.multiplicities[a], d.isotypes[a].size());
      for (std::size_t b = 0; b < d.isotypes.size(); ++b) {
        const bool iso = are_isomorphic(d.representations[d.isotypes[a].front()], d.representations[d.isotypes[b].front()]);
        EXPECT_EQ(iso, a == b) << name;
      }
      for (std::size_t j : d.isotypes[a]) {
        EXPECT_TRUE(are_isomorphic(d.representations[d.isotypes[a].front()], d.representations[j])) << name;
      }
    }
  }
}

TEST(Decompose, MultiplicitiesAgreeWithPairOrbitOracle) {
  // All multiplicities above one in the fixtures belong to real-type
  // constituents, whose symmetric commutant contributes m(m+1)/2.
  for (const auto& [name, g] : fx::all_groups()) {
    const auto d = decompose_permutation_representation(g, 0);
    std::size_t sum = 0;
    for (std::size_t m : d.multiplicities) sum += m * (m + 1) / 2;
    EXPECT_EQ(static_cast<int>(sum), fx::orbits_on_pairs(g)) << name;
  }
}

TEST(Decompose, KnownIsotypeStructure) {
  const std::map<std::string, std::vector<int>> dims_by_group = {
      {"D6", {2, 2, 1, 1}}, {"D4on8", {2, 2, 1, 1, 1, 1}}, {"S4", {3, 1}}, {"O48", {3, 3, 1, 1}}, {"swap", {1, 1, 1, 1}}};
  for (const auto& [name, g] : fx::all_groups()) {
    if (!dims_by_group.contains(name)) continue;
    EXPECT_EQ(dims(decompose_permutation_representation(g, 0)), dims_by_group.at(name)) << name;
  }
}

TEST(Decompose, DeterministicPerSeed) {
  for (const auto& [name, g] : fx::all_groups()) {
    const auto a = decompose_permutation_representation(g, 42);
    const auto b = decompose_permutation_representation(g, 42);
    ASSERT_EQ(a.subspaces.size(), b.subspaces.size());
    for (std::size_t i = 0; i < a.subspaces.size(); ++i) EXPECT_EQ(a.subspaces[i].basis(), b.subspaces[i].basis()) << name;
    EXPECT_EQ(a.isotypes, b.isotypes);
    EXPECT_EQ(a.seed_trail, b.seed_trail);
  }
}

TEST(Decompose, SeedIndependentSubspaces) {
  // Multiplicity-one constituents are unique, so their projectors cannot depend on the seed.
  const auto g = fx::d6();
  const auto a = decompose_permutation_representation(g, 1);
  const auto b = decompose_permutation_representation(g, 99);
  ASSERT_EQ(a.subspaces.size(), b.subspaces.size());
  for (std::size_t i = 0; i < a.subspaces.size(); ++i) {
    EXPECT_LT((a.subspaces[i].projector() - b.subspaces[i].projector()).norm(), 1e-8);
  }
}

TEST(Multiplicity, Examples) {
  for (const auto& [name, g] : fx::transitive_groups()) {
    const auto d = decompose_permutation_representation(g, 0);
    EXPECT_EQ(multiplicity_of(ArrangementSpace(Vector::Ones(g.degree()).normalized()), d), 1u) << name;
  }
  const auto sw = decompose_permutation_representation(fx::swap_pairs(), 0);
  EXPECT_EQ(multiplicity_of(ArrangementSpace(Vector(Eigen::Vector4d(1, 1, 0, 0).normalized())), sw), 2u);
  const auto d6 = decompose_permutation_representation(fx::d6(), 0);
  EXPECT_EQ(multiplicity_of(arrangement_space(fx::hexagon()), d6), 1u);
}

TEST(Multiplicity, Errors) {
  const auto d = decompose_permutation_representation(fx::c3(), 0);
  expect_kind(ErrorKind::NotInvariant,
              [&] { multiplicity_of(ArrangementSpace(Vector(Eigen::Vector3d(1, -1, 0).normalized())), d); });
  expect_kind(ErrorKind::NotIrreducible, [&] { multiplicity_of(ArrangementSpace(Matrix::Identity(3, 3)), d); });
}

TEST(AlignedConstituents, ShareRepresentation) {
  const auto g = fx::d4_eight();
  const auto d = decompose_permutation_representation(g, 0);
  for (std::size_t k = 0; k < d.isotypes.size(); ++k) {
    const auto copies = aligned_constituents(d, k);
    const auto& target = d.representations[d.isotypes[k].front()];
    for (const auto& c : copies) EXPECT_LT(symmetry_residual(c, target), 1e-9);
  }
}
