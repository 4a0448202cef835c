// One PASS/FAIL line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "torslab/suites.hpp"
#include "torslab/wallchamber.hpp"

using namespace torslab;

namespace {

std::string data(const std::string& name) { return std::string(TORSLAB_DATA) + "/" + name + ".alg"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const Algebra> load(const std::string& name, int p = 0) {
  return std::make_shared<const Algebra>(load_algebra_file(data(name), p));
}

DimVector default_bound(const Algebra& alg) { return alg.num_vertices() == 1 ? DimVector{3} : DimVector{2, 2}; }

SuiteOptions options(const std::string& name, DimVector bound) {
  SuiteOptions o;
  o.algebra_id = name;
  o.source = slurp(data(name));
  o.bound = std::move(bound);
  return o;
}

int count(const SuiteReport& r, const std::string& claim, Status s) {
  int c = 0;
  for (const auto& k : r.checks) c += k.claim == claim && k.status == s;
  return c;
}

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < limit_s, "over the time limit");
  if (!o.ok) ++failures;
  std::printf("criterion %2d %s  %s (%.1f s of %.0f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), s, limit_s,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

// ---- criterion 1

void euler_duality(Outcome& out) {
  for (const char* name : {"a2", "kronecker", "loop", "kxk"})
    for (int p : {2, 3}) {
      auto alg = load(name, p);
      const int n = alg->num_vertices();
      const auto c = simple_endomorphism_dims(*alg);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          IntVector e(n, 0);
          e[i] = 1;
          DimVector s(n, 0);
          s[j] = 1;
          const Rational v = euler_pairing(StabilityVector::from_ints(e), s, c);
          out.require(v == Rational(i == j ? c[j] : 0), std::string(name) + ": <P(i),S(j)>");
          out.require(v == Rational(hom_dim(*alg, projective_module(*alg, i), simple_module(*alg, j))),
                      std::string(name) + ": <P(i),S(j)> vs Hom");
        }
      const Catalogue cat = Catalogue::enumerate(alg, default_bound(*alg));
      for (const auto& theta : lattice_grid(n, -3, 3)) {
        const PresentationPair pp = presentation_pair(theta);
        const Representation p0 = projective_sum(*alg, pp.p0), p1 = projective_sum(*alg, pp.p1);
        for (int m = 0; m < cat.size(); ++m) {
          const long long h = hom_dim(*alg, p0, cat.item(m)) - hom_dim(*alg, p1, cat.item(m));
          out.require(euler_pairing(theta, cat.dims(m), c) == Rational(h), std::string(name) + ": theta(M) vs Hom");
        }
      }
    }
}

// ---- criterion 2

void torsion_lattices(Outcome& out) {
  for (auto [name, bound, expected] : {std::tuple{"a2", DimVector{2, 2}, 5}, std::tuple{"kxk", DimVector{2, 2}, 4},
                                       std::tuple{"loop", DimVector{3}, 2}}) {
    const AmpleCertificate a = ample_certificate(load(name), bound);
    out.require(a.classes == expected, std::string(name) + ": class count " + std::to_string(a.classes));
    out.require(a.stable(), std::string(name) + ": counts change at bound+1");
    const SuiteReport r = run_smalo(options(name, bound));
    out.require(r.exit_code() == 0, std::string(name) + ": smalo suite exit " + std::to_string(r.exit_code()));
    out.require(count(r, "fac-sub-symmetry", Status::Pass) == expected, std::string(name) + ": not every class passes");
  }
}

// ---- criterion 3

void silting_bijection(Outcome& out) {
  for (auto [name, bound, expected] : {std::tuple{"a2", DimVector{2, 2}, 5}, std::tuple{"loop", DimVector{3}, 2}}) {
    auto alg = load(name);
    const auto g = enumerate_silting(*alg, 10);
    out.require(g.complete, std::string(name) + ": graph not complete");
    out.require(static_cast<int>(g.vertices.size()) == expected, std::string(name) + ": vertex count");
    const Catalogue cat = Catalogue::enumerate(alg, bound);
    TorsionCalculus calc(cat);
    std::set<boost::dynamic_bitset<>> images, classes;
    for (const auto& v : g.vertices) images.insert(induced_torsion_pairs(*alg, calc, v.total(*alg)).t.members);
    for (const auto& t : calc.enumerate_torsion_classes()) classes.insert(t.members);
    out.require(images.size() == g.vertices.size(), std::string(name) + ": T_U not injective");
    out.require(images == classes, std::string(name) + ": T_U not onto");
  }
}

// ---- criterion 4

void semistable_bicompact(Outcome& out) {
  const SuiteReport a = run_semistable(options("a2", {2, 2}));
  out.require(a.exit_code() == 0, "A_2 semistable suite not all pass");
  out.require(a.summary["rigid"] == 81, "A_2 grid not all rigid");
  auto o = options("kronecker", {3, 3});
  o.depth = 10;
  o.grid_lo = -2;
  o.grid_hi = 2;
  const SuiteReport k = run_semistable(o);
  int rigid_points = 0;
  bool found = false;
  for (const auto& c : k.checks) {
    out.require(c.status != Status::Fail, "Kronecker check failed: " + c.claim);
    if (c.claim != "rigid-iff-bicompact") continue;
    if (c.witness["verdict"] == "rigid") {
      ++rigid_points;
      out.require(c.status == Status::Pass, "Kronecker rigid point without all witnesses: " + c.witness["theta"].get<std::string>());
    }
    if (c.witness["theta"] == "1,-1") {
      found = true;
      out.require(c.witness["verdict"] == "unknown" && c.witness["depth"] == 10, "(1,-1) verdict");
      out.require(c.witness["T_strictly_inside_Tbar"] == true, "(1,-1) T not strictly inside Tbar");
      out.require(c.witness["Tbar_fac_generator"].is_null(), "(1,-1) Tbar has a Fac-single witness");
    }
  }
  out.require(found, "(1,-1) not evaluated");
  out.require(rigid_points > 0, "no rigid Kronecker points");
}

// ---- criteria 5, 6

void four_way(Outcome& out) {
  for (auto [name, bound] : {std::pair{"a2", DimVector{2, 2}}, std::pair{"kxk", DimVector{2, 2}}, std::pair{"loop", DimVector{3}},
                             std::pair{"kronecker", DimVector{2, 2}}}) {
    const SuiteReport r = run_numdis(options(name, bound));
    const int pass = count(r, "cone-separation-equivalence", Status::Pass);
    out.require(pass == r.summary["torsion_classes"].get<int>(), std::string(name) + ": equivalence fails on some pair");
    out.require(count(r, "cone-separation-equivalence", Status::Fail) == 0, std::string(name) + ": failure");
  }
}

void hereditary_ff(Outcome& out) {
  for (auto [name, bound] : {std::pair{"a2", DimVector{2, 2}}, std::pair{"kronecker", DimVector{3, 3}}}) {
    const SuiteReport r = run_numdis(options(name, bound));
    out.require(count(r, "hereditary-bicompact-implies-ff", Status::Pass) > 0, std::string(name) + ": nothing checked");
    out.require(count(r, "hereditary-bicompact-implies-ff", Status::WindowLimited) == 0, std::string(name) + ": missing Fac witness");
    out.require(count(r, "hereditary-bicompact-implies-ff", Status::Fail) == 0, std::string(name) + ": failure");
  }
}

// ---- criterion 7

void fei_check(Outcome& out) {
  auto a2 = load("a2");
  const Catalogue ca = Catalogue::enumerate(a2, {3, 3});
  TorsionCalculus cc(ca);
  for (auto v : {IntVector{1, -1}, IntVector{2, -1}, IntVector{-1, 2}}) {
    const auto theta = StabilityVector::from_ints(v);
    const FeiReport r = fei_union_check(*a2, cc, theta, 2);
    out.require(r.equality && r.union_set == r.tbar, "A_2 " + theta.to_string() + ": union differs");
  }
  auto k = load("kronecker");
  const Catalogue ck = Catalogue::enumerate(k, {3, 3});
  TorsionCalculus kc(ck);
  const FeiReport r = fei_union_check(*k, kc, StabilityVector::from_ints({1, -1}), 3);
  out.require(r.containment, "Kronecker containment");
  out.note = std::string("Kronecker (1,-1) equality ") + (r.equality ? "reached at l=" + std::to_string(*r.equality_level) : "not reached");
}

// ---- criterion 8

void scan(Outcome& out) {
  auto o = options("kronecker", {1, 1});
  o.fields = {2, 3, 5};
  o.grid_lo = -1;
  o.grid_hi = 1;
  const SuiteReport r = run_scan(o);
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.witness["theta"] != "1,-1") continue;
    found = true;
    for (auto [p, size] : {std::pair{"2", 3}, std::pair{"3", 4}, std::pair{"5", 6}}) {
      const auto& e = c.witness["per_field"][p];
      out.require(e["size"] == size, std::string("p=") + p + " size");
      out.require(e["hom_orthogonal"] == true, std::string("p=") + p + " orthogonality");
      out.require(e["generates_Tbar"] == true, std::string("p=") + p + " t_of(S) != Tbar");
    }
  }
  out.require(found, "(1,-1) not in the scan");
  out.require(r.exit_code() != 1, "scan reported a failure");
}

// ---- criterion 9

void properties(Outcome& out) {
  std::mt19937 rng(909);
  for (auto [name, bound] : {std::pair{"a2", DimVector{2, 2}}, std::pair{"kronecker", DimVector{2, 2}}, std::pair{"loop", DimVector{3}},
                             std::pair{"kxk", DimVector{2, 2}}}) {
    auto alg = load(name);
    const Catalogue cat = Catalogue::enumerate(alg, bound);
    TorsionCalculus c(cat);
    const int n = alg->num_vertices();
    int bad = 0;
    auto random_set = [&] {
      std::vector<int> idx;
      for (int i = 1; i < c.size(); ++i)
        if (rng() % 4 == 0) idx.push_back(i);
      return c.make(idx);
    };
    for (int t = 0; t < 200; ++t) {
      const SubcatSet s = random_set();
      SubcatSet big = s;
      big.members |= random_set().members;
      for (auto op : {&TorsionCalculus::fac_closure, &TorsionCalculus::sub_closure, &TorsionCalculus::filt_closure,
                      &TorsionCalculus::t_of, &TorsionCalculus::f_of}) {
        const SubcatSet once = (c.*op)(s);
        bad += !((c.*op)(once) == once) + !s.subset_of(once) + !once.subset_of((c.*op)(big));
      }
      bad += !(c.left_perp(c.right_perp(c.left_perp(s))) == c.left_perp(s));
      bad += !(c.right_perp(c.left_perp(c.right_perp(s))) == c.right_perp(s));

      StabilityVector eta, theta;
      for (int i = 0; i < n; ++i) {
        eta.coords.push_back(Rational(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 3));
        theta.coords.push_back(eta.coords.back() + Rational(1 + static_cast<long long>(rng() % 5), 1 + rng() % 4));
      }
      bad += !cw_less(eta, theta);
      const auto qe = semistable_quadruple(eta, cat), qt = semistable_quadruple(theta, cat);
      bad += !qe.T.subset_of(qe.Tbar) + !qt.T.subset_of(qt.Tbar) + !qe.F.subset_of(qe.Fbar);
      bad += !qe.Tbar.subset_of(qt.T) + !qt.Fbar.subset_of(qe.F);
      const auto qs = semistable_quadruple(theta.scaled(Rational(1 + static_cast<long long>(rng() % 7), 1 + rng() % 5)), cat);
      bad += !(qs.T == qt.T) + !(qs.Tbar == qt.Tbar) + !(qs.F == qt.F) + !(qs.Fbar == qt.Fbar);
    }
    const auto g = enumerate_silting(*alg, 6);
    for (const auto& e : g.edges) {
      const auto& from = g.vertices[e.from];
      const auto& to = g.vertices[e.to];
      bad += !(mutate(*alg, from, e.summand).key() == to.key());
      for (size_t k = 0; k < to.g_vectors.size(); ++k)
        if (std::find(from.g_vectors.begin(), from.g_vectors.end(), to.g_vectors[k]) == from.g_vectors.end())
          bad += !(mutate(*alg, to, static_cast<int>(k)).key() == from.key());
    }
    out.require(bad == 0, std::string(name) + ": " + std::to_string(bad) + " violations");
  }
}

// ---- criterion 10

std::string bundle() {
  std::string all;
  auto add = [&](const SuiteReport& r) { all += r.to_json().dump(2) + "\n"; };
  for (auto [name, bound] : {std::pair{"a2", DimVector{2, 2}}, std::pair{"loop", DimVector{3}}, std::pair{"kxk", DimVector{2, 2}}}) {
    for (const char* s : {"smalo", "semistable", "numdis", "brickfinite"}) {
      SuiteReport r = run_suite(s, options(name, bound));
      r.seconds.reset();
      add(r);
    }
  }
  for (const char* s : {"smalo", "semistable", "numdis", "brickfinite"}) {
    SuiteReport r = run_suite(s, options("kronecker", {3, 3}));
    r.seconds.reset();
    add(r);
  }
  auto o = options("kronecker", {1, 1});
  o.fields = {2, 3, 5};
  SuiteReport sr = run_suite("scan", o);
  sr.seconds.reset();
  add(sr);
  for (const char* name : {"a2", "kronecker", "kxk"}) {
    auto alg = load(name);
    const Catalogue cat = Catalogue::enumerate(alg, {2, 2});
    const auto g = enumerate_silting(*alg, 10);
    all += fan_json(name, *alg, g).dump(2) + "\n";
    all += wallchamber_svg(cat, g, WallChamberOptions{}).svg;
  }
  return all;
}

void determinism(Outcome& out) {
  const std::string first = bundle(), second = bundle();
  out.require(!first.empty(), "empty bundle");
  out.require(first == second, "runs differ");
  out.note = std::to_string(first.size()) + " bytes compared";
}

}  // namespace

int main() {
  criterion(1, "Euler duality over F_2 and F_3", 10, euler_duality);
  criterion(2, "torsion lattices with ample bounds and the Smalo equivalence", 30, torsion_lattices);
  criterion(3, "silting complexes biject onto torsion classes", 30, silting_bijection);
  criterion(4, "rigid lattice points have bicompact semistable torsion classes", 180, semistable_bicompact);
  criterion(5, "four-way cone equivalence with verified separators", 60, four_way);
  criterion(6, "hereditary bicompact classes are functorially finite", 60, hereditary_ff);
  criterion(7, "union of Tbar_f over presentation maps", 120, fei_check);
  criterion(8, "semibrick sizes p+1 for the Kronecker scan", 120, scan);
  criterion(9, "closure, reflexivity, sandwich, order, scaling and mutation properties", 120, properties);
  criterion(10, "byte-identical reports and SVG across two runs", 600, determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
