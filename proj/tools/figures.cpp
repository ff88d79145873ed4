#include "figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "symarr/io.hpp"

namespace symarr::figures {

namespace {

PermutationGroup from_cycles(const std::vector<std::string>& gens, int n) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_permutation(g, n));
  return group_from_generators(std::move(perms), n);
}

std::vector<std::pair<int, int>> cycle_edges(int first, int count) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < count; ++i) e.emplace_back(first + i, first + (i + 1) % count);
  return e;
}

}  // namespace

PermutationGroup klein_four() { return from_cycles({"(1 2)(3 4)", "(1 3)(2 4)"}, 4); }

Arrangement square() {
  Matrix m(4, 2);
  m << 1, 1, -1, 1, -1, -1, 1, -1;
  return Arrangement(m / 2.0);
}

PermutationGroup hexagon_group() { return from_cycles({"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 6); }

Arrangement hexagon() {
  Matrix m(6, 2);
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    m(k, 0) = std::cos(a);
    m(k, 1) = std::sin(a);
  }
  return Arrangement(m / std::sqrt(3.0));
}

PermutationGroup d4_on_eight() { return from_cycles({"(1 2 3 4)(5 6 7 8)", "(2 4)(5 8)(6 7)"}, 8); }

Arrangement two_squares(double phi) {
  Matrix m(8, 2);
  for (int k = 0; k < 4; ++k) {
    const double a = k * std::numbers::pi / 2.0;
    const double b = a + std::numbers::pi / 4.0;
    m(k, 0) = std::cos(phi) * std::cos(a);
    m(k, 1) = std::cos(phi) * std::sin(a);
    m(k + 4, 0) = std::sin(phi) * std::cos(b);
    m(k + 4, 1) = std::sin(phi) * std::sin(b);
  }
  return Arrangement(m / std::sqrt(2.0));
}

std::vector<std::string> write_all(const std::filesystem::path& dir, int steps, std::uint64_t seed,
                                   const Tolerance& tol) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& svg) {
    io::write_file(dir / name, svg);
    written.push_back(name);
  };

  emit("klein_four_square.svg",
       io::points_svg(square().matrix(), {1.1, "Klein four group on a square (reducible)", cycle_edges(0, 4)}));
  emit("d6_hexagon.svg",
       io::points_svg(hexagon().matrix(), {1.1, "D6 on the regular hexagon (irreducible)", cycle_edges(0, 6)}));

  const PermutationGroup g = d4_on_eight();
  const Decomposition dec = decompose_permutation_representation(g, seed, tol);
  const DeformationPath path =
      build_deformation(two_squares(std::numbers::pi / 4.0), two_squares(std::numbers::pi / 3.0), dec, steps, seed, tol);
  auto edges = cycle_edges(0, 4);
  for (auto e : cycle_edges(4, 4)) edges.push_back(e);
  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "flexible_%04zu.svg", i);
    char title[96];
    std::snprintf(title, sizeof title, "D4 on eight points, t = %.4f", path.samples[i].t);
    emit(name, io::points_svg(path.samples[i].points.matrix(), {1.1, title, edges}));
  }

  emit("relations.svg", io::relations_svg());
  return written;
}

}  // namespace symarr::figures
