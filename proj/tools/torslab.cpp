#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "torslab/suites.hpp"
#include "torslab/wallchamber.hpp"

using namespace torslab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DimVector parse_dims(const std::string& text) {
  DimVector d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) d.push_back(std::stoi(part));
  return d;
}

std::vector<int> parse_ints(const std::string& text) { return parse_dims(text); }

std::pair<int, int> parse_range(const std::string& text) {
  const auto c = text.find(':', 1);
  if (c == std::string::npos) throw std::invalid_argument("range must look like a:b, got " + text);
  return {std::stoi(text.substr(0, c)), std::stoi(text.substr(c + 1))};
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

struct Common {
  std::string algebra;
  std::string bound;
  std::string out;
  int field = 0;
  int depth = 10;
  bool serial = false;

  std::string id() const { return std::filesystem::path(algebra).stem().string(); }
  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
  std::shared_ptr<const Algebra> load() const { return std::make_shared<const Algebra>(load_algebra_file(algebra, field)); }
  DimVector dims(const Algebra& alg, int fallback) const {
    if (!bound.empty()) {
      DimVector d = parse_dims(bound);
      if (static_cast<int>(d.size()) != alg.num_vertices()) throw std::invalid_argument("--bound needs one entry per vertex");
      return d;
    }
    return DimVector(alg.num_vertices(), fallback);
  }
};

void add_common(CLI::App* app, Common& c, bool with_bound) {
  app->add_option("--algebra", c.algebra, "algebra file")->required()->check(CLI::ExistingFile);
  if (with_bound) app->add_option("--bound", c.bound, "dimension-vector bound d1,d2,...");
  app->add_option("--field", c.field, "override the prime p of the file");
  app->add_option("--out", c.out, "output file (default stdout)");
  app->add_flag("--serial", c.serial, "run kernels serially");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torslab: torsion classes, stability and silting over finite-dimensional path algebras"};
  app.require_subcommand(1);

  Common vc;
  std::string suite, grid = "-4:4";
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, vc, true);
  verify->add_option("--suite", suite, "smalo | semistable | numdis | brickfinite")
      ->required()
      ->check(CLI::IsMember({"smalo", "semistable", "numdis", "brickfinite"}));
  verify->add_option("--grid", grid, "lattice window a:b for theta grids");
  verify->add_option("--depth", vc.depth, "silting BFS depth");
  verify->add_flag("--timings", timings, "record wall-clock seconds in the report");

  Common sc;
  std::string fields = "2,3,5", scan_grid = "-4:4";
  bool scan_timings = false;
  auto* scan = app.add_subcommand("scan", "look for non-rigid lattice points and tabulate semibricks per field");
  add_common(scan, sc, true);
  scan->add_option("--fields", fields, "primes p");
  scan->add_option("--grid", scan_grid, "lattice window a:b");
  scan->add_option("--depth", sc.depth, "silting BFS depth");
  scan->add_flag("--timings", scan_timings, "record wall-clock seconds in the report");

  Common fc;
  auto* fan = app.add_subcommand("fan", "enumerate two-term silting complexes and export the g-vector fan");
  add_common(fan, fc, false);
  fan->add_option("--depth", fc.depth, "BFS depth");

  Common wc;
  std::string window = "-5:5";
  int resolution = 4;
  auto* wall = app.add_subcommand("wallchamber", "rank-2 wall and chamber picture as SVG");
  add_common(wall, wc, true);
  wall->add_option("--window", window, "theta window a:b on both axes");
  wall->add_option("--resolution", resolution, "samples per unit")->check(CLI::Range(1, 32));
  wall->add_option("--depth", wc.depth, "BFS depth for the fan overlay");

  Common ec;
  std::string what = "catalogue";
  auto* exp = app.add_subcommand("export", "dump the module catalogue or the torsion lattice as JSON");
  add_common(exp, ec, true);
  exp->add_option("--what", what, "catalogue | lattice")->check(CLI::IsMember({"catalogue", "lattice"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto alg = vc.load();
      SuiteOptions o;
      o.algebra_id = vc.id();
      o.source = slurp(vc.algebra);
      o.field = alg->field().p();
      if (vc.bound.empty()) throw std::invalid_argument("verify needs --bound");
      o.bound = vc.dims(*alg, 2);
      o.depth = vc.depth;
      std::tie(o.grid_lo, o.grid_hi) = parse_range(grid);
      o.exec = vc.exec();
      SuiteReport r = run_suite(suite, o);
      if (!timings) r.seconds.reset();
      emit(vc.out, r.to_json().dump(2) + "\n");
      return r.exit_code();
    }
    if (*scan) {
      auto alg = sc.load();
      SuiteOptions o;
      o.algebra_id = sc.id();
      o.source = slurp(sc.algebra);
      o.field = alg->field().p();
      o.bound = sc.dims(*alg, 1);
      o.depth = sc.depth;
      o.fields = parse_ints(fields);
      std::tie(o.grid_lo, o.grid_hi) = parse_range(scan_grid);
      o.exec = sc.exec();
      SuiteReport r = run_suite("scan", o);
      if (!scan_timings) r.seconds.reset();
      emit(sc.out, r.to_json().dump(2) + "\n");
      return r.exit_code();
    }
    if (*fan) {
      auto alg = fc.load();
      const MutationGraph g = enumerate_silting(*alg, fc.depth);
      emit(fc.out, fan_json(fc.id(), *alg, g).dump(2) + "\n");
      return 0;
    }
    if (*wall) {
      auto alg = wc.load();
      const Catalogue cat = Catalogue::enumerate(alg, wc.dims(*alg, 2));
      const MutationGraph g = enumerate_silting(*alg, wc.depth);
      WallChamberOptions o;
      std::tie(o.lo, o.hi) = parse_range(window);
      o.resolution = resolution;
      const auto pic = wallchamber_svg(cat, g, o, wc.exec());
      emit(wc.out, pic.svg);
      std::cerr << pic.samples << " samples, " << pic.regions << " regions\n";
      return 0;
    }
    if (*exp) {
      auto alg = ec.load();
      const Catalogue cat = Catalogue::enumerate(alg, ec.dims(*alg, 2));
      if (what == "catalogue") {
        emit(ec.out, catalogue_json(ec.id(), cat).dump(2) + "\n");
      } else {
        TorsionCalculus calc(cat, ec.exec());
        emit(ec.out, lattice_json(ec.id(), cat, calc.enumerate_torsion_classes()).dump(2) + "\n");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "torslab: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
