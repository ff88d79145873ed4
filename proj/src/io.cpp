#include "symarr/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symarr/errors.hpp"

namespace symarr::io {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::ParseError, "non-finite number cannot be written as JSON");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void write(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write(value, out, indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (is_flat(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(j[i], out, indent + 2);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) field_error(key, "enclosing value is not an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(key, "missing");
  return *it;
}

int require_int(const Json& j, const char* key, int min_value) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) field_error(key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < min_value || x > 1'000'000) field_error(key, "value " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

Matrix matrix_from_rows(const Json& rows, const std::string& field, int cols) {
  if (!rows.is_array()) field_error(field, "expected an array of rows");
  Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      field_error(where, "expected " + std::to_string(cols) + " numbers");
    }
    for (int k = 0; k < cols; ++k) {
      if (!row[static_cast<std::size_t>(k)].is_number()) field_error(where, "entry " + std::to_string(k) + " is not a number");
      m(static_cast<int>(i), k) = row[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return m;
}

Json rows_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json generators_json(const PermutationGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  return gens;
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = std::min(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << content;
}

Json to_json(const Matrix& m) { return rows_json(m); }

Json to_json(const PermutationGroup& g) {
  Json j;
  j["n"] = g.degree();
  j["generators"] = generators_json(g);
  return j;
}

Json to_json(const Arrangement& v) {
  Json j;
  j["n"] = v.size();
  j["d"] = v.dim();
  j["points"] = rows_json(v.matrix());
  return j;
}

Json to_json(const Representation& t) {
  Json j;
  j["group"] = to_json(t.group());
  j["dim"] = t.dim();
  Json images = Json::array();
  for (const auto& m : t.generator_images()) images.push_back(rows_json(m));
  j["generator_images"] = std::move(images);
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["n"] = d.group.degree();
  j["group"] = to_json(d.group);
  j["seed"] = d.seed;
  j["seed_trail"] = d.seed_trail;
  Json subs = Json::array();
  for (std::size_t i = 0; i < d.subspaces.size(); ++i) {
    Json s;
    s["dim"] = d.subspaces[i].rank();
    s["isotype"] = d.isotype_of(i);
    s["basis"] = rows_json(d.subspaces[i].basis().transpose());
    subs.push_back(std::move(s));
  }
  j["subspaces"] = std::move(subs);
  j["isotypes"] = d.isotypes;
  j["multiplicities"] = d.multiplicities;
  return j;
}

Json to_json(const Matroid& m) {
  Json j;
  j["n"] = m.ground_size();
  Json bases = Json::array();
  for (auto b : m.bases()) {
    for (int& i : b) ++i;
    bases.push_back(b);
  }
  j["bases"] = std::move(bases);
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["eq"] = r.eq;
  j["eq_plus"] = r.eq_plus;
  j["iso"] = r.iso;
  j["iso_plus"] = r.iso_plus;
  j["d_eq"] = r.d_eq;
  j["d"] = r.dim;
  j["d_parity"] = r.even() ? "even" : "odd";
  j["rigidity"] = {r.rigid_first, r.rigid_second};
  j["rule"] = std::string(to_string(r.rule));
  j["justification"] = r.justification;
  return j;
}

Json to_json(const SymmetryReport& r, std::optional<bool> irreducible) {
  Json j;
  j["is_gamma"] = r.is_gamma;
  j["is_spherical"] = r.is_spherical;
  j["is_invariant_space"] = r.is_invariant_space;
  j["irreducible"] = irreducible ? Json(*irreducible) : Json(nullptr);
  j["representation"] = r.representation ? to_json(*r.representation) : Json(nullptr);
  if (r.failure_witness) {
    Json w;
    w["generator"] = r.failure_witness->generator.to_cycle_string();
    w["residual"] = r.failure_witness->residual;
    j["failure_witness"] = std::move(w);
  } else {
    j["failure_witness"] = nullptr;
  }
  return j;
}

Json to_json(const DeformationPath& p, int steps_per_leg) {
  Json j;
  j["group"] = to_json(p.group);
  j["legs"] = p.legs;
  j["steps_per_leg"] = steps_per_leg;
  j["max_step"] = p.max_step;
  j["det_lipschitz"] = p.det_lipschitz;
  Json samples = Json::array();
  for (const auto& s : p.samples) {
    Json e;
    e["t"] = s.t;
    e["points"] = rows_json(s.points.matrix());
    e["normalization_residual"] = s.normalization_residual;
    e["symmetry_residual"] = s.symmetry_residual;
    e["det_to_start"] = s.det_to_start;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

PermutationGroup group_from_json(const Json& j) {
  const int n = require_int(j, "n", 1);
  const Json& gens = require(j, "generators");
  if (!gens.is_array()) field_error("generators", "expected an array");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Json& g = gens[i];
    const std::string where = "generators[" + std::to_string(i) + "]";
    try {
      if (g.is_string()) {
        perms.push_back(parse_permutation(g.get<std::string>(), n));
      } else if (g.is_array()) {
        std::vector<int> images;
        for (const Json& x : g) {
          if (!x.is_number_integer()) field_error(where, "image list must hold integers");
          images.push_back(x.get<int>() - 1);
        }
        if (static_cast<int>(images.size()) != n) field_error(where, "image list must have n entries");
        perms.emplace_back(std::move(images));
      } else {
        field_error(where, "expected a cycle string or an image list");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      field_error(where, e.what());
    }
  }
  return group_from_generators(std::move(perms), n);
}

Arrangement arrangement_from_json(const Json& j) {
  const int n = require_int(j, "n", 1);
  const int d = require_int(j, "d", 1);
  const Json& pts = require(j, "points");
  if (!pts.is_array() || static_cast<int>(pts.size()) != n) {
    field_error("points", "expected " + std::to_string(n) + " rows");
  }
  return Arrangement(matrix_from_rows(pts, "points", d));
}

Representation representation_from_json(const Json& j) {
  const PermutationGroup g = group_from_json(require(j, "group"));
  const int d = require_int(j, "dim", 1);
  const Json& imgs = require(j, "generator_images");
  if (!imgs.is_array() || imgs.size() != g.generators().size()) {
    field_error("generator_images", "expected one matrix per generator");
  }
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    const std::string where = "generator_images[" + std::to_string(i) + "]";
    if (!imgs[i].is_array() || static_cast<int>(imgs[i].size()) != d) field_error(where, "expected a square matrix");
    mats.push_back(matrix_from_rows(imgs[i], where, d));
  }
  return Representation(g, d, std::move(mats));
}

Matroid matroid_from_json(const Json& j) {
  const int n = require_int(j, "n", 0);
  const Json& bases = require(j, "bases");
  if (!bases.is_array()) field_error("bases", "expected an array");
  std::vector<std::vector<int>> out;
  for (const Json& b : bases) {
    if (!b.is_array()) field_error("bases", "each basis must be an array");
    std::vector<int> idx;
    for (const Json& x : b) {
      if (!x.is_number_integer()) field_error("bases", "indices must be integers");
      idx.push_back(x.get<int>() - 1);
    }
    out.push_back(std::move(idx));
  }
  return Matroid::from_bases(n, out);
}

Arrangement arrangement_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (std::getline(cells, cell, ',')) {
      ++col;
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || cell.find_first_not_of(" \t", used) != std::string::npos) {
        throw Error(ErrorKind::ParseError,
                    "csv line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": not a number");
      }
      row.push_back(x);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::ParseError, "csv line " + std::to_string(lineno) + ": inconsistent column count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "csv holds no points");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k) m(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  return Arrangement(m);
}

std::string arrangement_to_csv(const Arrangement& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    for (int k = 0; k < v.dim(); ++k) {
      if (k) out += ",";
      out += format_double(v.matrix()(i, k));
    }
    out += "\n";
  }
  return out;
}

std::string path_to_csv(const DeformationPath& p) {
  std::string out = "t";
  if (!p.samples.empty()) {
    const Matrix& m = p.samples.front().points.matrix();
    for (int i = 0; i < m.rows(); ++i) {
      for (int k = 0; k < m.cols(); ++k) out += ",p" + std::to_string(i + 1) + "_" + std::to_string(k + 1);
    }
  }
  out += "\n";
  for (const auto& s : p.samples) {
    out += format_double(s.t);
    const Matrix& m = s.points.matrix();
    for (int i = 0; i < m.rows(); ++i) {
      for (int k = 0; k < m.cols(); ++k) out += "," + format_double(m(i, k));
    }
    out += "\n";
  }
  return out;
}

PermutationGroup load_group(const std::filesystem::path& path) {
  return group_from_json(parse(read_file(path), path.string()));
}

Arrangement load_arrangement(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".csv") return arrangement_from_csv(text);
  return arrangement_from_json(parse(text, path.string()));
}

Representation load_representation(const std::filesystem::path& path) {
  return representation_from_json(parse(read_file(path), path.string()));
}

std::string points_svg(const Matrix& points, const SvgStyle& style) {
  constexpr double kSize = 512.0;
  const double e = style.extent;
  auto sx = [&](double x) { return (x + e) / (2 * e) * kSize; };
  auto sy = [&](double y) { return (e - y) / (2 * e) * kSize; };
  auto coord = [&](int i, int k) { return k < points.cols() ? points(i, k) : 0.0; };
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  out += "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  if (!style.title.empty()) out += "<title>" + style.title + "</title>\n";
  out += "<line x1=\"" + fixed3(sx(0)) + "\" y1=\"0\" x2=\"" + fixed3(sx(0)) +
         "\" y2=\"512\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"0\" y1=\"" + fixed3(sy(0)) + "\" x2=\"512\" y2=\"" + fixed3(sy(0)) +
         "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  for (const auto& [a, b] : style.edges) {
    out += "<line x1=\"" + fixed3(sx(coord(a, 0))) + "\" y1=\"" + fixed3(sy(coord(a, 1))) + "\" x2=\"" +
           fixed3(sx(coord(b, 0))) + "\" y2=\"" + fixed3(sy(coord(b, 1))) +
           "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < points.rows(); ++i) {
    const std::string cx = fixed3(sx(coord(i, 0)));
    const std::string cy = fixed3(sy(coord(i, 1)));
    out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"6\" fill=\"#1f5fa8\"/>\n";
    out += "<text x=\"" + fixed3(sx(coord(i, 0)) + 8) + "\" y=\"" + fixed3(sy(coord(i, 1)) - 8) +
           "\" font-size=\"14\" font-family=\"sans-serif\">" + std::to_string(i + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string relations_svg() {
  struct Node {
    const char* name;
    double x, y;
  };
  const Node nodes[] = {{"eq+", 96, 96}, {"eq", 96, 416}, {"d-eq", 256, 256}, {"iso+", 416, 96}, {"iso", 416, 416}};
  struct Edge {
    int from, to;
    const char* condition;
  };
  const Edge edges[] = {
      {0, 1, ""},       {3, 4, ""},          {0, 2, ""},           {1, 4, ""},          {0, 3, ""},
      {2, 3, ""},       {3, 2, "d even or flexible"}, {2, 0, "rigid"}, {4, 3, "d odd"}, {3, 0, "d even, rigid"},
      {4, 1, "rigid"},
  };
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  out += "<defs><marker id=\"head\" markerWidth=\"10\" markerHeight=\"8\" refX=\"10\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L10,4 L0,8 z\" fill=\"#333\"/></marker></defs>\n";
  out += "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  for (const auto& e : edges) {
    const Node& a = nodes[e.from];
    const Node& b = nodes[e.to];
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    const double ux = dx / len, uy = dy / len;
    const bool conditional = e.condition[0] != '\0';
    const double off = conditional ? 8.0 : -8.0;
    const double px = -uy * off, py = ux * off;
    const double x1 = a.x + ux * 34 + px, y1 = a.y + uy * 34 + py;
    const double x2 = b.x - ux * 34 + px, y2 = b.y - uy * 34 + py;
    out += "<line x1=\"" + fixed3(x1) + "\" y1=\"" + fixed3(y1) + "\" x2=\"" + fixed3(x2) + "\" y2=\"" + fixed3(y2) +
           "\" stroke=\"#333\" stroke-width=\"1.5\" marker-end=\"url(#head)\"" +
           (conditional ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    if (conditional) {
      out += "<text x=\"" + fixed3((x1 + x2) / 2 + px * 2) + "\" y=\"" + fixed3((y1 + y2) / 2 + py * 2) +
             "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">" + e.condition + "</text>\n";
    }
  }
  for (const auto& n : nodes) {
    out += "<circle cx=\"" + fixed3(n.x) + "\" cy=\"" + fixed3(n.y) +
           "\" r=\"30\" fill=\"#eef3fa\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fixed3(n.x) + "\" y=\"" + fixed3(n.y + 5) +
           "\" font-size=\"15\" font-family=\"sans-serif\" text-anchor=\"middle\">" + n.name + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace symarr::io
