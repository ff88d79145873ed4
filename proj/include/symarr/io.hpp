#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symarr/decomposition.hpp"
#include "symarr/duality.hpp"
#include "symarr/topology.hpp"

namespace symarr::io {

using Json = nlohmann::ordered_json;

/// Serializes with two-space indentation, numeric arrays on one line and
/// floats printed with 17 significant digits. Ends with a newline.
std::string dump(const Json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse(const std::string& text, const std::string& source = "input");

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

Json to_json(const PermutationGroup& g);
Json to_json(const Arrangement& v);
Json to_json(const Representation& t);
Json to_json(const Decomposition& d);
Json to_json(const Matroid& m);
Json to_json(const RelationReport& r);
Json to_json(const SymmetryReport& r, std::optional<bool> irreducible);
Json to_json(const DeformationPath& p, int steps_per_leg);
Json to_json(const Matrix& m);

/// {"n": int, "generators": [cycle string or 1-based image list, ...]}
PermutationGroup group_from_json(const Json& j);
/// {"n": int, "d": int, "points": [[...], ...]}
Arrangement arrangement_from_json(const Json& j);
/// {"group": {...}, "dim": int, "generator_images": [row-major matrices]}
Representation representation_from_json(const Json& j);
/// {"n": int, "bases": [[1-based indices], ...]}
Matroid matroid_from_json(const Json& j);

/// One point per line, comma separated; blank lines and '#' lines skipped.
Arrangement arrangement_from_csv(const std::string& text);
std::string arrangement_to_csv(const Arrangement& v);
/// Header "t,p1_1,p1_2,...", then one row per sample with points flattened.
std::string path_to_csv(const DeformationPath& p);

PermutationGroup load_group(const std::filesystem::path& path);
/// JSON, or CSV when the extension is ".csv".
Arrangement load_arrangement(const std::filesystem::path& path);
Representation load_representation(const std::filesystem::path& path);

struct SvgStyle {
  double extent = 1.1;  // drawn window is [-extent, extent]^2
  std::string title;
  std::vector<std::pair<int, int>> edges;  // 0-based point index pairs
};

/// 512x512 drawing of the first two coordinates with an origin crosshair,
/// points as radius-6 circles labelled 1..n.
std::string points_svg(const Matrix& points, const SvgStyle& style = {});

/// Diagram of the five relations and the implications between them;
/// conditional arrows are dashed and labelled with their condition.
std::string relations_svg();

}  // namespace symarr::io
