#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "expect.hpp"

using namespace symarr;

namespace {

Permutation P(const std::string& s, int n) { return parse_permutation(s, n); }

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  expect_kind(ErrorKind::InvalidPermutation, [] { Permutation({0, 0, 1}); });
  expect_kind(ErrorKind::InvalidPermutation, [] { Permutation({0, 3, 1}); });
}

TEST(Permutation, ParsesCyclesAndOneLine) {
  EXPECT_EQ(P("(1 2)(3 4)", 4).images(), (std::vector<int>{1, 0, 3, 2}));
  EXPECT_EQ(P("(1,2)(3,4)", 4), P("[2,1,4,3]", 4));
  EXPECT_TRUE(P("()", 3).is_identity());
  EXPECT_TRUE(P("", 3).is_identity());
  EXPECT_EQ(P("(1 2 3)", 3).images(), (std::vector<int>{1, 2, 0}));
  // cycles compose right to left
  EXPECT_EQ(P("(1 2)(2 3)", 3), P("(1 2)", 3) * P("(2 3)", 3));
}

TEST(Permutation, ParseErrors) {
  expect_kind(ErrorKind::ParseError, [] { P("(1 2", 3); });
  expect_kind(ErrorKind::InvalidPermutation, [] { P("(1 4)", 3); });
  expect_kind(ErrorKind::InvalidPermutation, [] { P("(1 2 1)", 3); });
  expect_kind(ErrorKind::InvalidPermutation, [] { P("[1,2]", 3); });
}

TEST(Permutation, CycleStringRoundTrip) {
  const auto s4 = fx::s4();
  for (const auto& p : s4.elements()) {
    EXPECT_EQ(P(p.to_cycle_string(), 4), p) << p.to_cycle_string();
  }
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Permutation, CompositionAndInverse) {
  const auto a = P("(1 2 3)", 3);
  const auto b = P("(1 2)", 3);
  for (int j = 0; j < 3; ++j) EXPECT_EQ((a * b)(j), a(b(j)));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a * a, P("(1 3 2)", 3));
}

TEST(Group, EmptyGenerators) {
  const auto g = group_from_generators({}, 3);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_trivial());
  EXPECT_TRUE(g.element(0).is_identity());
}

TEST(Group, CyclicOrderThree) { EXPECT_EQ(fx::c3().order(), 3u); }

TEST(Group, KleinFourElements) {
  const auto g = fx::klein();
  ASSERT_EQ(g.order(), 4u);
  for (const char* s : {"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"}) EXPECT_TRUE(g.contains(P(s, 4))) << s;
}

TEST(Group, OrdersMatchNaiveClosure) {
  const std::map<std::string, std::size_t> expected = {
      {"trivial2", 1}, {"C3", 3}, {"S3", 6},  {"C4", 4},  {"K4", 4},  {"D4", 8},  {"swap", 2},
      {"C6", 6},       {"D6", 12}, {"D4on8", 8}, {"S4", 24}, {"A4", 12}, {"O48", 48}};
  for (const auto& [name, g] : fx::all_groups()) {
    const auto naive = fx::naive_closure(g);
    EXPECT_EQ(g.order(), naive.size()) << name;
    EXPECT_EQ(g.order(), expected.at(name)) << name;
    for (const auto& p : g.elements()) EXPECT_TRUE(naive.contains(p.images())) << name;
  }
}

TEST(Group, ElementsSortedIdentityFirstAndClosed) {
  for (const auto& [name, g] : fx::all_groups()) {
    EXPECT_TRUE(g.element(0).is_identity()) << name;
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end())) << name;
    for (const auto& a : g.elements()) {
      EXPECT_TRUE(g.contains(a.inverse()));
      for (const auto& b : g.elements()) ASSERT_TRUE(g.contains(a * b)) << name;
    }
  }
}

TEST(Group, WordsEvaluateToElements) {
  for (const auto& [name, g] : fx::all_groups()) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      Permutation x = Permutation::identity(g.degree());
      for (int k : g.word(i)) x = x * g.generators()[static_cast<std::size_t>(k)];
      EXPECT_EQ(x, g.element(i)) << name;
    }
  }
}

TEST(Group, CapIsEnforced) {
  expect_kind(ErrorKind::ClosureExceedsCap, [] { group_from_generators({P("(1 2 3 4)", 4), P("(1 2)", 4)}, 4, 10); });
  expect_kind(ErrorKind::InvalidPermutation, [] { group_from_generators({P("(1 2)", 2)}, 3); });
}

TEST(PermutationMatrix, Conventions) {
  EXPECT_TRUE(permutation_matrix(Permutation::identity(2)).isIdentity());
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_EQ(permutation_matrix(P("(1 2)", 2)), swap);
  const Matrix p = permutation_matrix(P("(1 2 3)", 3));
  for (int j = 0; j < 3; ++j) EXPECT_EQ(p.col(j), Matrix::Identity(3, 3).col((j + 1) % 3));
  EXPECT_EQ(p * p, permutation_matrix(P("(1 3 2)", 3)));
}

TEST(PermutationMatrix, HomomorphismAndTransposeExact) {
  for (const auto& [name, g] : fx::all_groups()) {
    for (const auto& a : g.elements()) {
      EXPECT_EQ(permutation_matrix(a).transpose(), permutation_matrix(a.inverse()));
      for (const auto& b : g.elements()) {
        ASSERT_EQ(permutation_matrix(a) * permutation_matrix(b), permutation_matrix(a * b)) << name;
      }
    }
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer(fx::c3(), 0).order(), 1u);
  const auto st = stabilizer(fx::s3(), 0);
  EXPECT_EQ(st.order(), 2u);
  EXPECT_TRUE(st.contains(P("(2 3)", 3)));
  EXPECT_EQ(stabilizer(fx::trivial(2), 1).order(), 1u);
}

TEST(Stabilizer, OrbitStabilizerTheorem) {
  for (const auto& [name, g] : fx::all_groups()) {
    for (int i = 0; i < g.degree(); ++i) {
      EXPECT_EQ(stabilizer(g, i).order() * orbit(g, i).size(), g.order()) << name << " point " << i;
    }
  }
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_transitive(fx::c4()));
  EXPECT_FALSE(is_transitive(fx::swap_pairs()));
  EXPECT_EQ(orbits(fx::swap_pairs()), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(is_transitive(fx::trivial(1)));
  EXPECT_FALSE(is_transitive(fx::d4_eight()));
}

TEST(Transversal, CyclicThree) {
  const auto t = transversal(fx::c3(), 0);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_TRUE(t[0].is_identity());
  EXPECT_EQ(t[1], P("(1 2 3)", 3));
  EXPECT_EQ(t[2], P("(1 3 2)", 3));
}

TEST(Transversal, MapsBaseToEveryPoint) {
  EXPECT_TRUE(transversal(fx::trivial(1), 0)[0].is_identity());
  for (const auto& [name, g] : fx::transitive_groups()) {
    const auto t = transversal(g, 0);
    ASSERT_EQ(static_cast<int>(t.size()), g.degree());
    for (int i = 0; i < g.degree(); ++i) EXPECT_EQ(t[static_cast<std::size_t>(i)](0), i) << name;
  }
  expect_kind(ErrorKind::NotTransitive, [] { transversal(fx::swap_pairs(), 0); });
}
