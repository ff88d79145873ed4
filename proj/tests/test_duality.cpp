#include <gtest/gtest.h>

#include "expect.hpp"
#include "fixtures.hpp"
#include "symarr/duality.hpp"

using namespace symarr;

namespace {

Matroid uniform(int r, int n) {
  std::vector<bool> indep(1u << n);
  for (unsigned m = 0; m < indep.size(); ++m) indep[m] = std::popcount(m) <= r;
  return Matroid(n, indep);
}

/// Oracle: I independent iff the selected rows have full row rank (LU).
Matroid oracle_linear(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<bool> indep(1u << n);
  for (unsigned mask = 0; mask < indep.size(); ++mask) {
    indep[mask] = fx::subset_rank(m, mask, 1e-9) == std::popcount(mask);
  }
  return Matroid(n, indep);
}

}  // namespace

TEST(Matroid, ValidatesInput) {
  expect_kind(ErrorKind::GroundTooLarge, [] { Matroid(17, std::vector<bool>()); });
  expect_kind(ErrorKind::ParseError, [] { Matroid(1, {false, true}); });
  expect_kind(ErrorKind::ParseError, [] { Matroid(2, {true, false, false, true}); });
}

TEST(Matroid, FromBasesAndBack) {
  const auto m = Matroid::from_bases(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(m, uniform(2, 3));
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.bases(), (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(matroid_axiom_violations(m).empty());
}

TEST(Matroid, AxiomCheckerFindsExchangeFailure) {
  // Downward closed, yet {2} cannot be extended by an element of {0,1}.
  std::vector<bool> indep(8, false);
  indep[0] = indep[1] = indep[2] = indep[3] = indep[4] = true;
  const Matroid bad(3, indep);
  EXPECT_FALSE(matroid_axiom_violations(bad).empty());
}

TEST(MatroidOfSpace, Examples) {
  EXPECT_EQ(matroid_of_space(ArrangementSpace(Matrix::Identity(4, 4))), uniform(4, 4));
  EXPECT_EQ(matroid_of_space(ArrangementSpace(Vector::Ones(3).normalized())), uniform(1, 3));
  const auto sq = fx::square_raw();
  const auto m = matroid_of_space(arrangement_space(sq));
  EXPECT_EQ(m.rank(), 2);
  EXPECT_FALSE(m.is_independent(std::vector<int>{0, 2}));
  EXPECT_TRUE(m.is_independent(std::vector<int>{0, 1}));
  EXPECT_EQ(m, linear_matroid(sq));
  expect_kind(ErrorKind::GroundTooLarge, [] { matroid_of_space(ArrangementSpace(Matrix::Identity(17, 1))); });
}

TEST(LinearMatroid, Examples) {
  EXPECT_EQ(linear_matroid(fx::column({1, 2, -3, 4})), uniform(1, 4));
  EXPECT_EQ(linear_matroid(Arrangement(Matrix::Identity(3, 3))), uniform(3, 3));
  Matrix m = Matrix::Zero(3, 2);
  m(0, 0) = 1;
  m(2, 1) = 1;
  const auto lm = linear_matroid(Arrangement(m));
  EXPECT_FALSE(lm.is_independent(std::vector<int>{1}));
  EXPECT_TRUE(lm.is_independent(std::vector<int>{0, 2}));
}

TEST(LinearMatroid, MatchesSpaceMatroidAndOracleOnRandomInstances) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> nd(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nd(rng);
    const int d = 1 + trial % n;
    Matrix m = fx::gaussian(n, d, rng);
    if (trial % 3 == 0 && d >= 3) m.col(d - 1) = m.col(0) + m.col(1);  // rank-deficient
    if (trial % 4 == 0) m.row(0) = m.row(n - 1);                      // repeated point
    const Arrangement v(m);
    const auto lm = linear_matroid(v);
    EXPECT_EQ(lm, matroid_of_space(arrangement_space(v))) << "trial " << trial;
    EXPECT_EQ(lm, oracle_linear(m)) << "trial " << trial;
    if (n <= 7) EXPECT_TRUE(matroid_axiom_violations(lm).empty());
  }
}

TEST(MatroidDual, Examples) {
  const auto free4 = uniform(4, 4);
  EXPECT_EQ(matroid_dual(free4), uniform(0, 4));
  EXPECT_EQ(matroid_dual(uniform(1, 3)), uniform(2, 3));
}

TEST(MatroidDual, InvolutionAndRankSum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7, d = 1 + trial % n;
    const auto m = linear_matroid(Arrangement(fx::gaussian(n, d, rng) * fx::gaussian(d, d, rng)));
    const auto dual = matroid_dual(m);
    EXPECT_EQ(matroid_dual(dual), m);
    EXPECT_EQ(m.rank() + dual.rank(), n);
    EXPECT_TRUE(matroid_axiom_violations(dual).empty());
  }
}

TEST(MatroidDual, EqualsMatroidOfComplementOnFixtures) {
  for (const auto& [name, g] : fx::all_groups()) {
    const auto dec = decompose_permutation_representation(g, 0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 4; ++trial) {
      const ArrangementSpace u(linalg::column_space(fx::random_invariant_basis(dec, rng, false), 1e-9));
      EXPECT_EQ(matroid_dual(matroid_of_space(u)), matroid_of_space(u.complement())) << name;
    }
    for (const auto& s : dec.subspaces) {
      EXPECT_EQ(matroid_dual(matroid_of_space(s)), matroid_of_space(s.complement())) << name;
    }
  }
}

TEST(Gale, Examples) {
  Matrix m(2, 1);
  m << 1, 0;
  const auto g = gale_dual(Arrangement(m));
  EXPECT_NEAR(std::abs(g.matrix()(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(g.matrix()(0, 0), 0.0, 1e-12);

  const auto sq = fx::square_raw();
  const auto gs = gale_dual(sq);
  EXPECT_EQ(gs.dim(), 2);
  EXPECT_LT((gs.matrix().transpose() * sq.matrix()).norm(), 1e-12);
  EXPECT_TRUE(equivalent(gale_dual(gs), normalize(sq)));
  expect_kind(ErrorKind::DegenerateComplement, [] { gale_dual(Arrangement(Matrix::Identity(3, 3))); });
  expect_kind(ErrorKind::DegenerateComplement, [] { gale_dual(Arrangement::zero(3, 1)); });
}

TEST(Gale, ProjectorsSumToIdentity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6, d = 1 + trial % (n - 1);
    const Arrangement v(fx::gaussian(n, d, rng));
    const auto g = gale_dual(v);
    EXPECT_EQ(g.dim(), n - d);
    const Matrix sum = arrangement_space(v).projector() + arrangement_space(g).projector();
    EXPECT_LT((sum - Matrix::Identity(n, n)).norm(), 1e-8);
    const auto back = gale_dual(g);
    EXPECT_LT((arrangement_space(back).projector() - arrangement_space(normalize(v)).projector()).norm(), 1e-8);
  }
}
