#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "symarr/arrangement.hpp"
#include "symarr/permgroup.hpp"

namespace symarr::figures {

/// Klein four group {id, (12)(34), (13)(24), (14)(23)} on four points.
PermutationGroup klein_four();
/// Normalized square, vertices labelled counterclockwise.
Arrangement square();

/// Dihedral group of the hexagon: rotation (1 2 3 4 5 6), reflection (2 6)(3 5).
PermutationGroup hexagon_group();
Arrangement hexagon();

/// Dihedral group of order 8 on four square vertices and four edge midpoints.
PermutationGroup d4_on_eight();
/// Normalized arrangement with the vertex orbit at radius cos(phi) and the
/// midpoint orbit at radius sin(phi), up to the common normalization.
Arrangement two_squares(double phi);

/// Writes the figure set into `dir` and returns the file names written.
std::vector<std::string> write_all(const std::filesystem::path& dir, int steps, std::uint64_t seed,
                                   const Tolerance& tol);

}  // namespace symarr::figures
