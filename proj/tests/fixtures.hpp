#pragma once

// Test fixtures and independent reference computations.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symarr/decomposition.hpp"
#include "symarr/permgroup.hpp"

namespace fx {

using symarr::Arrangement;
using symarr::Matrix;
using symarr::Permutation;
using symarr::PermutationGroup;
using symarr::Vector;

inline PermutationGroup group(const std::vector<std::string>& cycles, int n) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(symarr::parse_permutation(c, n));
  return symarr::group_from_generators(std::move(gens), n);
}

inline PermutationGroup trivial(int n) { return symarr::group_from_generators({}, n); }
inline PermutationGroup c3() { return group({"(1 2 3)"}, 3); }
inline PermutationGroup s3() { return group({"(1 2 3)", "(1 2)"}, 3); }
inline PermutationGroup c4() { return group({"(1 2 3 4)"}, 4); }
inline PermutationGroup klein() { return group({"(1 2)(3 4)", "(1 3)(2 4)"}, 4); }
inline PermutationGroup d4() { return group({"(1 2 3 4)", "(2 4)"}, 4); }
inline PermutationGroup swap_pairs() { return group({"(1 2)(3 4)"}, 4); }
inline PermutationGroup c6() { return group({"(1 2 3 4 5 6)"}, 6); }
inline PermutationGroup d6() { return group({"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 6); }
inline PermutationGroup d4_eight() { return group({"(1 2 3 4)(5 6 7 8)", "(2 4)(5 8)(6 7)"}, 8); }
inline PermutationGroup s4() { return group({"(1 2 3 4)", "(1 2)"}, 4); }
inline PermutationGroup a4() { return group({"(1 2 3)", "(2 3 4)"}, 4); }

/// Cube vertices: index bits b0 b1 b2 give coordinates (+-1, +-1, +-1).
inline Matrix cube_vertices() {
  Matrix m(8, 3);
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 3; ++k) m(i, k) = (i >> k) & 1 ? -1.0 : 1.0;
  }
  return m;
}

/// Full symmetry group of the cube (order 48) acting on its vertices.
inline PermutationGroup octahedral() {
  const Matrix v = cube_vertices();
  Matrix quarter(3, 3), cyc(3, 3), mirror(3, 3);
  quarter << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  mirror << -1, 0, 0, 0, 1, 0, 0, 0, 1;
  std::vector<Permutation> gens;
  for (const Matrix* t : {&quarter, &cyc, &mirror}) {
    std::vector<int> img(8);
    for (int i = 0; i < 8; ++i) {
      const Vector w = *t * v.row(i).transpose();
      for (int j = 0; j < 8; ++j) {
        if ((v.row(j).transpose() - w).norm() < 1e-12) img[i] = j;
      }
    }
    gens.emplace_back(img);
  }
  return symarr::group_from_generators(gens, 8);
}

struct NamedGroup {
  std::string name;
  PermutationGroup g;
};

inline std::vector<NamedGroup> all_groups() {
  return {{"trivial2", trivial(2)}, {"C3", c3()},           {"S3", s3()},        {"C4", c4()},
          {"K4", klein()},          {"D4", d4()},           {"swap", swap_pairs()}, {"C6", c6()},
          {"D6", d6()},             {"D4on8", d4_eight()},  {"S4", s4()},        {"A4", a4()},
          {"O48", octahedral()}};
}

inline std::vector<NamedGroup> transitive_groups() {
  return {{"C3", c3()}, {"S3", s3()},   {"C4", c4()}, {"K4", klein()}, {"D4", d4()},
          {"C6", c6()}, {"D6", d6()},   {"S4", s4()}, {"A4", a4()},    {"O48", octahedral()}};
}

// ---- arrangements

/// Square labelled counterclockwise, unnormalized.
inline Arrangement square_raw() {
  Matrix m(4, 2);
  m << 1, 1, -1, 1, -1, -1, 1, -1;
  return Arrangement(m);
}
inline Arrangement square() { return Arrangement(square_raw().matrix() / 2.0); }
inline Arrangement rectangle() {
  Matrix m(4, 2);
  m << 2, 1, -2, 1, -2, -1, 2, -1;
  return Arrangement(m);
}

inline Arrangement hexagon() {
  Matrix m(6, 2);
  for (int k = 0; k < 6; ++k) {
    m(k, 0) = std::cos(k * std::numbers::pi / 3.0);
    m(k, 1) = std::sin(k * std::numbers::pi / 3.0);
  }
  return Arrangement(m / std::sqrt(3.0));
}

inline Matrix mirror2() {
  Matrix t(2, 2);
  t << 1, 0, 0, -1;
  return t;
}

/// D4 on eight points: vertex orbit scaled by cos(phi), midpoint orbit by sin(phi).
inline Arrangement two_squares(double phi) {
  Matrix m(8, 2);
  for (int k = 0; k < 4; ++k) {
    const double a = k * std::numbers::pi / 2.0, b = a + std::numbers::pi / 4.0;
    m(k, 0) = std::cos(phi) * std::cos(a);
    m(k, 1) = std::cos(phi) * std::sin(a);
    m(k + 4, 0) = std::sin(phi) * std::cos(b);
    m(k + 4, 1) = std::sin(phi) * std::sin(b);
  }
  return Arrangement(m / std::sqrt(2.0));
}

/// Column vector arrangement (d = 1).
inline Arrangement column(std::initializer_list<double> xs) {
  Matrix m(static_cast<int>(xs.size()), 1);
  int i = 0;
  for (double x : xs) m(i++, 0) = x;
  return Arrangement(m);
}

// ---- randomness

inline Matrix gaussian(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m(i, k) = nd(rng);
  return m;
}

inline Matrix random_orthogonal(int d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(d, d, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (int k = 0; k < d; ++k) {
    if (r(k, k) < 0) q.col(k) *= -1.0;
  }
  return q;
}

inline Matrix random_rotation(int d, std::mt19937_64& rng) {
  Matrix q = random_orthogonal(d, rng);
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

/// Random invariant subspace: every isotypic component contributes either
/// nothing or a random sum of generic copies of its constituent.
inline Matrix random_invariant_basis(const symarr::Decomposition& dec, std::mt19937_64& rng, bool irreducible) {
  std::uniform_int_distribution<std::size_t> pick(0, dec.isotypes.size() - 1);
  std::vector<Matrix> blocks;
  auto generic_copy = [&](std::size_t k) {
    const auto copies = symarr::aligned_constituents(dec, k);
    const Matrix c = gaussian(static_cast<int>(copies.size()), 1, rng);
    Matrix sum = Matrix::Zero(copies.front().size(), copies.front().dim());
    for (std::size_t j = 0; j < copies.size(); ++j) sum += c(static_cast<int>(j), 0) * copies[j].matrix();
    return Matrix(sum / c.norm());
  };
  if (irreducible) {
    blocks.push_back(generic_copy(pick(rng)));
  } else {
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < dec.isotypes.size(); ++k) {
      if (coin(rng)) blocks.push_back(generic_copy(k));
    }
    if (blocks.empty()) blocks.push_back(generic_copy(pick(rng)));
  }
  int cols = 0;
  for (const auto& b : blocks) cols += static_cast<int>(b.cols());
  Matrix m(blocks.front().rows(), cols);
  int at = 0;
  for (const auto& b : blocks) {
    m.middleCols(at, b.cols()) = b;
    at += static_cast<int>(b.cols());
  }
  return m;
}

// ---- oracles

/// Closure by repeated multiplication of all known elements until stable.
inline std::set<std::vector<int>> naive_closure(const PermutationGroup& g) {
  const int n = g.degree();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> s{id};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = s;
    for (const auto& a : snapshot) {
      for (const auto& gen : g.generators()) {
        std::vector<int> c(n);
        for (int j = 0; j < n; ++j) c[j] = a[gen(j)];
        grew |= s.insert(c).second;
      }
    }
  }
  return s;
}

/// T = (M^T M)^{-1} M^T P M by normal equations, for full-rank M.
inline Matrix oracle_representation(const Matrix& m, const Matrix& p) {
  return (m.transpose() * m).ldlt().solve(m.transpose() * p * m);
}

/// Number of orbits of the group on unordered pairs {i, j}, i <= j.
inline int orbits_on_pairs(const PermutationGroup& g) {
  const int n = g.degree();
  std::set<std::pair<int, int>> seen;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (seen.contains({i, j})) continue;
      ++count;
      for (const auto& p : g.elements()) {
        seen.insert(std::minmax(p(i), p(j)));
      }
    }
  }
  return count;
}

/// Character inner product <chi_perm, chi_perm> = number of orbits on ordered pairs.
inline double permutation_character_norm(const PermutationGroup& g) {
  double sum = 0.0;
  for (const auto& p : g.elements()) {
    int fixed = 0;
    for (int j = 0; j < g.degree(); ++j) fixed += p(j) == j;
    sum += static_cast<double>(fixed) * fixed;
  }
  return sum / static_cast<double>(g.order());
}

/// Rank of rows selected by mask via full-pivot LU with a fixed threshold.
inline int subset_rank(const Matrix& m, unsigned mask, double threshold) {
  std::vector<int> rows;
  for (int i = 0; i < m.rows(); ++i)
    if (mask >> i & 1u) rows.push_back(i);
  if (rows.empty()) return 0;
  Matrix s(static_cast<int>(rows.size()), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) s.row(static_cast<int>(k)) = m.row(rows[k]);
  Eigen::FullPivLU<Matrix> lu(s);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

}  // namespace fx
