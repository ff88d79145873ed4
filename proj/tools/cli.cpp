#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "figures.hpp"
#include "symarr/errors.hpp"
#include "symarr/io.hpp"

namespace symarr::cli {

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int steps = kDefaultSteps;
  std::string out;
  std::string format = "json";
};

class Sink {
 public:
  Sink(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}
  void emit(const std::string& text) const {
    if (opt_.out.empty()) {
      out_ << text;
    } else {
      io::write_file(opt_.out, text);
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

Vector parse_vector(const std::string& text) {
  std::vector<double> xs;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    std::size_t used = 0;
    try {
      xs.push_back(std::stod(cell, &used));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--v1: '" + cell + "' is not a number");
    }
  }
  if (xs.empty()) throw Error(ErrorKind::ParseError, "--v1 is empty");
  return Eigen::Map<Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::string arrangement_text(const Arrangement& v, const std::string& format) {
  if (format == "csv") return io::arrangement_to_csv(v);
  return io::dump(io::to_json(v));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric point arrangements: symmetry, decomposition, deformation and duality"};
  app.name("symarr");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for all randomized steps");
  app.add_option("--steps", opt.steps, "samples per deformation leg")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out, "output path (directory for svg frames and figures)");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.fallthrough();

  std::string arr1, arr2, group_path, rep_path, v1_text;
  int irrep_index = 0;
  bool v1_auto = false;
  bool dual = false;

  auto* analyze = app.add_subcommand("analyze", "symmetry report for an arrangement under a group");
  analyze->add_option("arrangement", arr1)->required();
  analyze->add_option("group", group_path)->required();

  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition of the permutation representation");
  decompose->add_option("group", group_path)->required();

  auto* construct = app.add_subcommand("construct", "orbit arrangement with a prescribed representation");
  construct->add_option("group", group_path)->required();
  construct->add_option("--irrep-index", irrep_index, "0-based isotype index in the decomposition")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--rep", rep_path, "representation file used instead of a constituent");
  auto* v1_opt = construct->add_option("--v1", v1_text, "comma separated first point");
  auto* v1_auto_opt = construct->add_flag("--v1-auto", v1_auto, "first basis vector of the fixed space");
  v1_opt->excludes(v1_auto_opt);

  auto* classify = app.add_subcommand("classify", "the five relations between two arrangements");
  classify->add_option("first", arr1)->required();
  classify->add_option("second", arr2)->required();
  classify->add_option("group", group_path)->required();

  auto* deform = app.add_subcommand("deform", "verified deformation path between two arrangements");
  deform->add_option("first", arr1)->required();
  deform->add_option("second", arr2)->required();
  deform->add_option("group", group_path)->required();

  auto* gale = app.add_subcommand("gale", "Gale dual arrangement");
  gale->add_option("arrangement", arr1)->required();

  auto* matroid = app.add_subcommand("matroid", "linear matroid of an arrangement");
  matroid->add_option("arrangement", arr1)->required();
  matroid->add_flag("--dual", dual, "emit the dual matroid");

  auto* figures = app.add_subcommand("figures", "write the figure set as SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    const Tolerance tol(opt.tol);
    const Sink sink(opt, out);

    if (*analyze) {
      const Arrangement v = io::load_arrangement(arr1);
      const PermutationGroup g = io::load_group(group_path);
      const SymmetryReport rep = is_gamma_arrangement(v, g, tol);
      std::optional<bool> irreducible;
      if (rep.representation) irreducible = is_irreducible(*rep.representation, tol);
      sink.emit(io::dump(io::to_json(rep, irreducible)));
      return rep.is_gamma ? kOk : kNegative;
    }
    if (*decompose) {
      const PermutationGroup g = io::load_group(group_path);
      sink.emit(io::dump(io::to_json(decompose_permutation_representation(g, opt.seed, tol))));
      return kOk;
    }
    if (*construct) {
      const PermutationGroup g = io::load_group(group_path);
      std::optional<Representation> t;
      if (!rep_path.empty()) {
        t = io::load_representation(rep_path);
        if (t->group().degree() != g.degree() || t->group().order() != g.order()) {
          throw Error(ErrorKind::DimensionMismatch, "representation belongs to a different group");
        }
        t = Representation(g, t->dim(),
                           std::vector<Matrix>(t->generator_images().begin(), t->generator_images().end()));
      } else {
        const Decomposition dec = decompose_permutation_representation(g, opt.seed, tol);
        if (static_cast<std::size_t>(irrep_index) >= dec.isotypes.size()) {
          throw Error(ErrorKind::DimensionMismatch, "--irrep-index " + std::to_string(irrep_index) + " but only " +
                                                        std::to_string(dec.isotypes.size()) + " isotypes");
        }
        t = dec.representations[dec.isotypes[static_cast<std::size_t>(irrep_index)].front()];
      }
      if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "group does not act transitively");
      const Matrix fix = fixed_space(*t, stabilizer(g, 0), tol);
      if (fix.cols() == 0) throw Error(ErrorKind::EmptyFix, "the stabilizer of point 1 fixes only the origin");
      const Vector v1 = v1_text.empty() ? Vector(fix.col(0)) : parse_vector(v1_text);
      sink.emit(arrangement_text(construct_orbit_arrangement(g, *t, v1, tol), opt.format));
      return kOk;
    }
    if (*classify || *deform) {
      const Arrangement v = io::load_arrangement(arr1);
      const Arrangement w = io::load_arrangement(arr2);
      const PermutationGroup g = io::load_group(group_path);
      const Decomposition dec = decompose_permutation_representation(g, opt.seed, tol);
      const RelationReport rel = classify_pair(v, w, dec, tol);
      if (*classify) {
        sink.emit(io::dump(io::to_json(rel)));
        return kOk;
      }
      if (!rel.d_eq) {
        err << "refused: not deformation equivalent (" << rel.justification << ")\n";
        return kNegative;
      }
      const DeformationPath path = build_deformation(v, w, dec, opt.steps, opt.seed, tol);
      if (opt.format == "csv") {
        sink.emit(io::path_to_csv(path));
      } else if (opt.format == "svg") {
        if (opt.out.empty()) throw Error(ErrorKind::ParseError, "--format svg needs --out DIRECTORY");
        std::filesystem::create_directories(opt.out);
        for (std::size_t i = 0; i < path.samples.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
          io::write_file(std::filesystem::path(opt.out) / name, io::points_svg(path.samples[i].points.matrix()));
        }
      } else {
        sink.emit(io::dump(io::to_json(path, opt.steps)));
      }
      return kOk;
    }
    if (*gale) {
      sink.emit(arrangement_text(gale_dual(io::load_arrangement(arr1), tol), opt.format));
      return kOk;
    }
    if (*matroid) {
      Matroid m = linear_matroid(io::load_arrangement(arr1), tol);
      for (std::uint32_t mask : m.near_singular()) {
        err << "warning: near-singular subset mask " << mask << "\n";
      }
      if (dual) m = matroid_dual(m);
      sink.emit(io::dump(io::to_json(m)));
      return kOk;
    }
    if (*figures) {
      const std::string dir = opt.out.empty() ? "figures" : opt.out;
      for (const auto& name : figures::write_all(dir, opt.steps, opt.seed, tol)) err << "wrote " << name << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace symarr::cli
