#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "torslab/suites.hpp"
#include "torslab/wallchamber.hpp"

using namespace torslab;

namespace {

SuiteOptions options(const std::string& name, DimVector bound) {
  std::ifstream in(support::data(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  SuiteOptions o;
  o.algebra_id = name;
  o.source = ss.str();
  o.bound = std::move(bound);
  return o;
}

int count(const SuiteReport& r, Status s) {
  int c = 0;
  for (const auto& k : r.checks) c += k.status == s;
  return c;
}

}  // namespace

TEST_CASE("exit codes") {
  SuiteReport r;
  CHECK(r.exit_code() == 0);
  r.add("a", "a", Status::Pass);
  CHECK(r.exit_code() == 0);
  r.add("b", "b", Status::WindowLimited);
  CHECK(r.exit_code() == 2);
  r.add("c", "c", Status::Fail);
  CHECK(r.exit_code() == 1);
  CHECK(r.to_json()["tally"]["window-limited"] == 1);
}

TEST_CASE("smalo suite on brick-finite algebras") {
  for (auto [name, bound, classes] : {std::tuple{"a2", DimVector{2, 2}, 5}, std::tuple{"loop", DimVector{3}, 2},
                                      std::tuple{"kxk", DimVector{2, 2}, 4}}) {
    const auto r = run_smalo(options(name, bound));
    CHECK(r.exit_code() == 0);
    CHECK(r.summary["torsion_classes"] == classes);
    CHECK(r.summary["passed"] == classes);
  }
}

TEST_CASE("smalo suite on the Kronecker window is never a pass by default") {
  const auto r = run_smalo(options("kronecker", {2, 2}));
  CHECK(r.exit_code() == 2);
  CHECK(count(r, Status::Fail) == 0);
  CHECK(r.checks.front().claim == "ample-bound");
  CHECK(r.checks.front().status == Status::WindowLimited);
}

TEST_CASE("numdis and brickfinite suites") {
  CHECK(run_numdis(options("a2", {2, 2})).exit_code() == 0);
  CHECK(run_numdis(options("loop", {3})).exit_code() == 0);
  const auto k = run_numdis(options("kronecker", {2, 2}));
  CHECK(count(k, Status::Fail) == 0);
  const auto b = run_brickfinite(options("a2", {2, 2}));
  CHECK(b.exit_code() == 0);
  CHECK(b.summary["bricks"] == 3);
  CHECK(b.summary["classes_with_all_predicates"] == 5);
  CHECK(run_brickfinite(options("kxk", {2, 2})).summary["bricks"] == 2);
  const auto kb = run_brickfinite(options("kronecker", {2, 2}));
  CHECK(kb.summary["brick_finite_evidence"] == false);
  CHECK(kb.checks.size() == 1);
  CHECK(kb.checks[0].claim == "brick-count-grows");
}

TEST_CASE("semistable suite") {
  const auto a = run_semistable(options("a2", {2, 2}));
  CHECK(a.exit_code() == 0);
  CHECK(a.summary["rigid"] == 81);
  auto o = options("kronecker", {3, 3});
  o.grid_lo = -2;
  o.grid_hi = 2;
  const auto k = run_semistable(o);
  CHECK(count(k, Status::Fail) == 0);
  bool seen = false;
  for (const auto& c : k.checks)
    if (c.claim == "rigid-iff-bicompact" && c.witness["theta"] == "1,-1") {
      seen = true;
      CHECK(c.status == Status::WindowLimited);
      CHECK(c.witness["verdict"] == "unknown");
      CHECK(c.witness["depth"] == 10);
      CHECK(c.witness["T_strictly_inside_Tbar"] == true);
      CHECK(c.witness["Tbar_fac_generator"].is_null());
    }
  CHECK(seen);
}

TEST_CASE("scan") {
  auto o = options("kronecker", {1, 1});
  o.fields = {2, 3, 5};
  o.grid_lo = -2;
  o.grid_hi = 2;
  const auto r = run_scan(o);
  CHECK(count(r, Status::Fail) == 0);
  REQUIRE(r.checks.size() == 2);  // (1,-1) and (2,-2)
  const auto& w = r.checks[0].witness;
  CHECK(w["theta"] == "1,-1");
  CHECK(w["per_field"]["2"]["size"] == 3);
  CHECK(w["per_field"]["3"]["size"] == 4);
  CHECK(w["per_field"]["5"]["size"] == 6);
  CHECK(w["growth"] == true);
  auto a = options("a2", {2, 2});
  a.fields = {2, 3};
  CHECK(run_scan(a).checks.empty());
}

TEST_CASE("brute-force hom vanishing") {
  auto k = support::load("kronecker");
  const Catalogue cat = Catalogue::enumerate(k, {1, 2});
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j)
      CHECK(hom_vanishes_bruteforce(*k, cat.item(i), cat.item(j)) == (hom_dim(*k, cat.item(i), cat.item(j)) == 0));
}

TEST_CASE("json exports") {
  auto a2 = support::load("a2");
  const Catalogue cat = Catalogue::enumerate(a2, {1, 1});
  TorsionCalculus calc(cat);
  const auto c = catalogue_json("a2", cat);
  CHECK(c["items"].size() == 5);
  const auto l = lattice_json("a2", cat, calc.enumerate_torsion_classes());
  CHECK(l["torsion_classes"].size() == 5);
  CHECK(l["hasse"].size() == 5);
  const auto f = fan_json("a2", *a2, enumerate_silting(*a2, 5));
  CHECK(f["cones"].size() == 5);
  CHECK(f["complete"] == true);
  CHECK(f.dump() == fan_json("a2", *a2, enumerate_silting(*a2, 5)).dump());
}

TEST_CASE("wall and chamber pictures") {
  struct Case {
    const char* name;
    int regions;
    int rays;
  };
  // open chambers + walls + the origin
  for (const auto& c : {Case{"a2", 5 + 5 + 1, 5}, Case{"kxk", 4 + 4 + 1, 4}}) {
    auto alg = support::load(c.name);
    const Catalogue cat = Catalogue::enumerate(alg, {2, 2});
    const auto fan = enumerate_silting(*alg, 6);
    WallChamberOptions o;
    o.resolution = 2;
    const auto pic = wallchamber_svg(cat, fan, o);
    CHECK(pic.regions == c.regions);
    size_t lines = 0;
    for (size_t pos = pic.svg.find("data-ray"); pos != std::string::npos; pos = pic.svg.find("data-ray", pos + 1)) ++lines;
    CHECK(lines == static_cast<size_t>(c.rays));
    CHECK(pic.svg == wallchamber_svg(cat, fan, o, Exec::Serial).svg);
  }
  auto loop = support::load("loop");
  const Catalogue lc = Catalogue::enumerate(loop, {2});
  CHECK_THROWS_AS(wallchamber_svg(lc, enumerate_silting(*loop, 2), {}), std::invalid_argument);
}
