#include "torslab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "torslab/stability.hpp"

namespace torslab {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::WindowLimited: return "window-limited";
  }
  return "fail";
}

void SuiteReport::add(std::string claim, std::string statement, Status s, json witness) {
  checks.push_back({std::move(claim), std::move(statement), s, std::move(witness)});
}

int SuiteReport::exit_code() const {
  bool limited = false;
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return 1;
    if (c.status == Status::WindowLimited) limited = true;
  }
  return limited ? 2 : 0;
}

json SuiteReport::to_json() const {
  json j;
  j["algebra"] = algebra;
  j["bound"] = bound;
  j["field"] = field;
  j["suite"] = suite;
  j["window_relative"] = true;
  json cs = json::array();
  std::map<std::string, int> tally;
  for (const auto& c : checks) {
    cs.push_back({{"claim", c.claim}, {"statement", c.statement}, {"status", to_string(c.status)}, {"witness", c.witness}});
    ++tally[to_string(c.status)];
  }
  j["checks"] = cs;
  j["tally"] = tally;
  j["summary"] = summary;
  j["exit_code"] = exit_code();
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::shared_ptr<const Algebra> load_for(const SuiteOptions& o, int field) {
  return std::make_shared<const Algebra>(load_algebra(o.source, field));
}

namespace {

Status judge(bool ok, bool certified) {
  if (ok) return Status::Pass;
  return certified ? Status::Fail : Status::WindowLimited;
}

json item_json(const Catalogue& cat, std::optional<int> i) {
  if (!i) return nullptr;
  return {{"index", *i}, {"dims", cat.dims(*i)}, {"fingerprint", cat.fingerprint(*i)}};
}

json gvectors_json(const std::vector<IntVector>& g) {
  json j = json::array();
  for (const auto& v : g) j.push_back(v);
  return j;
}

DimVector raised(const DimVector& b) {
  DimVector n = b;
  for (auto& x : n) ++x;
  return n;
}

struct Window {
  std::shared_ptr<const Algebra> alg;
  Catalogue cat;
  std::unique_ptr<TorsionCalculus> calc;

  Window(std::shared_ptr<const Algebra> a, const DimVector& bound, Exec exec)
      : alg(std::move(a)), cat(Catalogue::enumerate(alg, bound)), calc(std::make_unique<TorsionCalculus>(cat, exec)) {}
};

StabilityVector primitive_theta(const StabilityVector& th) {
  const auto v = th.integer_coords();
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g <= 1) return th;
  IntVector w;
  for (long long x : v) w.push_back(x / g);
  return StabilityVector::from_ints(w);
}

SuiteReport start(const SuiteOptions& o, const Algebra& alg, const std::string& name) {
  SuiteReport r;
  r.algebra = o.algebra_id;
  r.bound = o.bound;
  r.field = alg.field().p();
  r.suite = name;
  return r;
}

}  // namespace

AmpleCertificate ample_certificate(std::shared_ptr<const Algebra> alg, const DimVector& bound, Exec exec) {
  AmpleCertificate c;
  c.next = raised(bound);
  Window a(alg, bound, exec);
  c.classes = static_cast<int>(a.calc->enumerate_torsion_classes().size());
  c.bricks = static_cast<int>(enumerate_bricks(a.cat).size());
  try {
    Window b(alg, c.next, exec);
    c.classes_next = static_cast<int>(b.calc->enumerate_torsion_classes().size());
    c.bricks_next = static_cast<int>(enumerate_bricks(b.cat).size());
  } catch (const BudgetExceeded&) {
    c.next_exceeded = true;
    c.classes_next = c.bricks_next = -1;
  }
  return c;
}

bool hom_vanishes_bruteforce(const Algebra& alg, const Representation& x, const Representation& y) {
  const Fp& f = alg.field();
  int entries = 0;
  for (size_t v = 0; v < x.dims.size(); ++v) entries += x.dims[v] * y.dims[v];
  long long total = 1;
  for (int i = 0; i < entries; ++i) {
    total *= f.p();
    if (total > kExhaustiveCap) throw IsoOverflow("hom_vanishes_bruteforce: too many candidate maps");
  }
  for (long long idx = 1; idx < total; ++idx) {
    long long t = idx;
    Morphism phi;
    for (size_t v = 0; v < x.dims.size(); ++v) {
      Matrix m(y.dims[v], x.dims[v]);
      for (auto& e : m.data()) {
        e = static_cast<Elem>(t % f.p());
        t /= f.p();
      }
      phi.push_back(std::move(m));
    }
    bool ok = true;
    for (int a = 0; a < alg.num_arrows() && ok; ++a) {
      const auto& arr = alg.quiver().arrows[a];
      const Matrix xa = x.maps[a].rows() == x.dims[arr.target] && x.maps[a].cols() == x.dims[arr.source]
                            ? x.maps[a] : Matrix(x.dims[arr.target], x.dims[arr.source]);
      const Matrix ya = y.maps[a].rows() == y.dims[arr.target] && y.maps[a].cols() == y.dims[arr.source]
                            ? y.maps[a] : Matrix(y.dims[arr.target], y.dims[arr.source]);
      ok = linalg::multiply(f, phi[arr.target], xa) == linalg::multiply(f, ya, phi[arr.source]);
    }
    if (ok) return false;
  }
  return true;
}

json subcat_json(const SubcatSet& s) { return s.indices(); }

json catalogue_json(const std::string& id, const Catalogue& cat) {
  json items = json::array();
  for (int i = 0; i < cat.size(); ++i)
    items.push_back({{"index", i},
                     {"dims", cat.dims(i)},
                     {"fingerprint", cat.fingerprint(i)},
                     {"brick", cat.brick(i)},
                     {"end_dim", cat.end_dim(i)}});
  return {{"algebra", id}, {"field", cat.algebra().field().p()}, {"bound", cat.bound()}, {"items", items}};
}

json lattice_json(const std::string& id, const Catalogue& cat, const std::vector<SubcatSet>& classes) {
  json cls = json::array();
  for (size_t i = 0; i < classes.size(); ++i)
    cls.push_back({{"index", i}, {"size", classes[i].count()}, {"members", subcat_json(classes[i])}});
  json edges = json::array();
  for (const auto& [a, b] : hasse_edges(classes)) edges.push_back({a, b});
  return {{"algebra", id}, {"field", cat.algebra().field().p()}, {"bound", cat.bound()},
          {"torsion_classes", cls}, {"hasse", edges}};
}

json fan_json(const std::string& id, const Algebra& alg, const MutationGraph& g) {
  json cones = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    json summands = json::array();
    for (const auto& s : g.vertices[i].summands) summands.push_back(s.to_string(alg));
    cones.push_back({{"index", i}, {"rays", gvectors_json(g.vertices[i].g_vectors)}, {"summands", summands}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.summand});
  return {{"algebra", id}, {"field", alg.field().p()}, {"depth", g.depth}, {"complete", g.complete},
          {"cones", cones}, {"mutations", edges}};
}

SuiteReport run_smalo(const SuiteOptions& o) {
  auto alg = load_for(o, o.field);
  SuiteReport rep = start(o, *alg, "smalo");
  Window w(alg, o.bound, o.exec);
  const auto classes = w.calc->enumerate_torsion_classes();
  const AmpleCertificate ample = ample_certificate(alg, o.bound, o.exec);
  rep.add("ample-bound", "torsion class and brick counts are unchanged when every bound coordinate grows by one",
          ample.stable() ? Status::Pass : Status::WindowLimited,
          {{"next_bound", ample.next}, {"classes", {ample.classes, ample.classes_next}},
           {"bricks", {ample.bricks, ample.bricks_next}}});
  const MutationGraph graph = enumerate_silting(*alg, o.depth);
  const bool certified = ample.stable() && graph.complete;
  std::vector<SubcatSet> silting_t, silting_f;
  for (const auto& v : graph.vertices) {
    const TwoTermComplex u = v.total(*alg);
    silting_t.push_back(induced_torsion_pairs(*alg, *w.calc, u).t);
    silting_f.push_back(w.calc->sub_of_module(cohomology(*alg, u).hminus1_nu));
  }
  int passed = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    const SubcatSet& t = classes[c];
    const SubcatSet f = w.calc->right_perp(t);
    std::optional<int> sa, sb;
    for (size_t v = 0; v < graph.vertices.size(); ++v) {
      if (!sa && silting_t[v] == t) sa = static_cast<int>(v);
      if (!sb && silting_f[v] == f) sb = static_cast<int>(v);
    }
    const auto fac = w.calc->fac_single_witness(t);
    const auto sub = w.calc->sub_single_witness(f);
    const auto cpt = w.calc->compact_witness(t);
    const auto cocpt = w.calc->cocompact_witness(t);
    const bool all = sa && sb && fac && sub;
    const bool none = !sa && !sb && !fac && !sub;
    const bool bicompact = cpt && cocpt;
    Status s = judge(all && bicompact, certified);
    if (none) s = certified ? Status::Fail : Status::WindowLimited;
    if (s == Status::Pass) ++passed;
    rep.add("fac-sub-symmetry",
            "T functorially finite, F functorially finite, T = Fac M and F = Sub N hold together, and then T is bicompact",
            s,
            {{"class", c}, {"members", subcat_json(t)},
             {"silting_for_T", sa ? json(*sa) : json(nullptr)}, {"silting_for_F", sb ? json(*sb) : json(nullptr)},
             {"fac_generator", item_json(w.cat, fac)}, {"sub_cogenerator", item_json(w.cat, sub)},
             {"compact_witness", item_json(w.cat, cpt)}, {"cocompact_witness", item_json(w.cat, cocpt)}});
  }
  rep.summary = {{"torsion_classes", classes.size()}, {"passed", passed}, {"silting_complexes", graph.vertices.size()},
                 {"graph_complete", graph.complete}};
  return rep;
}

SuiteReport run_semistable(const SuiteOptions& o) {
  auto alg = load_for(o, o.field);
  SuiteReport rep = start(o, *alg, "semistable");
  Window w(alg, o.bound, o.exec);
  const int n = alg->num_vertices();
  const MutationGraph graph = enumerate_silting(*alg, o.depth);
  const std::vector<StabilityVector> thetas = lattice_grid(n, o.grid_lo, o.grid_hi);
  const auto quads = semistable_quadruples(thetas, w.cat, o.exec);
  int rigid = 0, unknown = 0, notrigid = 0;
  for (size_t k = 0; k < thetas.size(); ++k) {
    const auto& th = thetas[k];
    const auto& q = quads[k];
    const RigidityVerdict v = rigidity(th, graph);
    const auto t_cpt = w.calc->compact_witness(q.T);
    const auto t_cocpt = w.calc->cocompact_witness(q.T);
    const auto t_fac = w.calc->fac_single_witness(q.T);
    const auto tb_cpt = w.calc->compact_witness(q.Tbar);
    const auto tb_cocpt = w.calc->cocompact_witness(q.Tbar);
    const auto tb_fac = w.calc->fac_single_witness(q.Tbar);
    const bool b = t_cpt && t_cocpt, c = t_cpt.has_value(), d = t_fac.has_value();
    const bool e = tb_cpt && tb_cocpt, f = tb_cocpt.has_value(), g = tb_fac.has_value();
    const bool all = b && c && d && e && f && g;
    json wit = {{"theta", th.to_string()},
                {"verdict", to_string(v.status)},
                {"depth", v.depth},
                {"T", subcat_json(q.T)},
                {"Tbar", subcat_json(q.Tbar)},
                {"T_strictly_inside_Tbar", q.T.subset_of(q.Tbar) && !(q.T == q.Tbar)},
                {"T_compact", item_json(w.cat, t_cpt)},
                {"T_cocompact", item_json(w.cat, t_cocpt)},
                {"T_fac_generator", item_json(w.cat, t_fac)},
                {"Tbar_compact", item_json(w.cat, tb_cpt)},
                {"Tbar_cocompact", item_json(w.cat, tb_cocpt)},
                {"Tbar_fac_generator", item_json(w.cat, tb_fac)}};
    Status s = Status::WindowLimited;
    switch (v.status) {
      case RigidityVerdict::Status::Rigid: {
        ++rigid;
        wit["witness_rays"] = gvectors_json(v.witness_rays);
        s = all ? Status::Pass : Status::WindowLimited;
        const InducedPairs ip = induced_torsion_pairs(*alg, *w.calc, direct_sum(*alg, v.witness));
        const bool match = ip.t == q.T && ip.tbar == q.Tbar;
        rep.add("rigid-induced-pairs", "for theta in the open cone of U, T_theta = Fac H0(U) and Tbar_theta = left perp of H-1(nu U)",
                match ? Status::Pass : Status::Fail, {{"theta", th.to_string()}, {"witness_rays", gvectors_json(v.witness_rays)}});
        break;
      }
      case RigidityVerdict::Status::NotRigid:
        ++notrigid;
        s = all ? Status::WindowLimited : Status::Pass;
        break;
      case RigidityVerdict::Status::Unknown:
        ++unknown;
        s = Status::WindowLimited;
        break;
    }
    rep.add("rigid-iff-bicompact",
            "theta rigid iff T_theta bicompact iff compact iff functorially finite iff Tbar_theta bicompact iff cocompact iff functorially finite",
            s, wit);
    if (th.lattice()) {
      // A map for the primitive vector gives one for every multiple by direct sum.
      const PresentationSpace space = presentation_space(*alg, primitive_theta(th));
      const auto bits = tbar_sweep(*alg, w.cat, space, o.exec);
      std::optional<long long> single;
      if (bits)
        for (size_t i = 0; i < bits->size() && !single; ++i)
          if ((*bits)[i] == q.Tbar.members) single = static_cast<long long>(i);
      const bool hi = t_cocpt && tb_cpt;
      Status ls = Status::WindowLimited;
      if (v.status == RigidityVerdict::Status::Rigid && hi && single) ls = Status::Pass;
      rep.add("lattice-presentation",
              "for lattice theta, Tbar_theta = left perp of Ker(nu f) for one f in Hom(theta), and T_theta cocompact, Tbar_theta compact",
              ls,
              {{"theta", th.to_string()}, {"primitive", space.pair.theta.to_string()}, {"hom_dim", space.basis.size()}, {"swept", bits.has_value()},
               {"single_map_index", single ? json(*single) : json(nullptr)},
               {"T_cocompact", item_json(w.cat, t_cocpt)}, {"Tbar_compact", item_json(w.cat, tb_cpt)}});
    }
  }
  std::vector<StabilityVector> centres;
  for (const auto& v : graph.vertices) {
    IntVector sum(n, 0);
    for (const auto& g : v.g_vectors)
      for (int i = 0; i < n; ++i) sum[i] += g[i];
    centres.push_back(StabilityVector::from_ints(sum));
  }
  const auto centre_quads = semistable_quadruples(centres, w.cat, o.exec);
  for (size_t i = 0; i < centres.size(); ++i) {
    const RigidityVerdict v = rigidity(centres[i], graph);
    const InducedPairs ip = induced_torsion_pairs(*alg, *w.calc, graph.vertices[i].total(*alg));
    const bool ok = v.status == RigidityVerdict::Status::Rigid && v.vertex == static_cast<int>(i) &&
                    ip.t == centre_quads[i].T && ip.tbar == centre_quads[i].Tbar;
    rep.add("chamber-induced-pairs", "at the ray sum of each enumerated silting complex U, (T_theta, Tbar_theta) = (Fac H0(U), left perp of H-1(nu U))",
            ok ? Status::Pass : Status::Fail,
            {{"theta", centres[i].to_string()}, {"vertex", i}, {"rays", gvectors_json(graph.vertices[i].g_vectors)}});
  }
  rep.summary = {{"thetas", thetas.size()}, {"chambers_checked", centres.size()}, {"rigid", rigid}, {"unknown", unknown}, {"not_rigid", notrigid},
                 {"silting_complexes", graph.vertices.size()}, {"graph_complete", graph.complete}, {"depth", o.depth},
                 {"grid", {o.grid_lo, o.grid_hi}}};
  return rep;
}

SuiteReport run_numdis(const SuiteOptions& o) {
  auto alg = load_for(o, o.field);
  SuiteReport rep = start(o, *alg, "numdis");
  Window w(alg, o.bound, o.exec);
  const auto classes = w.calc->enumerate_torsion_classes();
  const bool hereditary = alg->quiver().relations.empty();
  int disjoint = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    const SubcatSet& t = classes[c];
    const SubcatSet f = w.calc->right_perp(t);
    const NumDisResult nd = numerically_disjoint(w.cat, t, f);
    const RationalCone ct = cone_of_subcat(w.cat, t), cf = cone_of_subcat(w.cat, f);
    const IntersectionResult inter = intersect_trivially(ct, cf);
    const bool convex = is_strongly_convex(difference_cone(ct, cf));
    const auto sep = separating_functional(ct, cf, w.cat.simple_end_dims());
    const auto common = common_class_bruteforce(w.cat, t, f);
    bool sep_ok = true;
    if (sep) {
      for (int i : t.indices()) sep_ok = sep_ok && membership(*sep, w.cat, i, Which::T);
      for (int i : f.indices()) sep_ok = sep_ok && membership(*sep, w.cat, i, Which::F);
    }
    const bool chain = nd.disjoint == inter.trivial && inter.trivial == convex && convex == sep.has_value();
    // A common class found by the bounded search certifies non-disjointness; absence of one is only evidence.
    const bool brute_ok = common ? !nd.disjoint : true;
    const bool certificate_ok = nd.disjoint ? inter.common.empty() : !inter.common.empty();
    json wit = {{"class", c}, {"numerically_disjoint", nd.disjoint}, {"trivial_intersection", inter.trivial},
                {"strongly_convex", convex}, {"separator", sep ? json(sep->to_string()) : json(nullptr)},
                {"separator_verified", sep_ok}, {"bruteforce_common", common ? json(*common) : json(nullptr)}};
    if (!inter.common.empty()) {
      json cv = json::array();
      for (const auto& x : inter.common) cv.push_back(std::to_string(x.numerator()) + (x.denominator() == 1 ? "" : "/" + std::to_string(x.denominator())));
      wit["common_class"] = cv;
    }
    rep.add("cone-separation-equivalence",
            "numerically disjoint iff cone T meets cone F only in 0 iff cone T - cone F strongly convex iff a separating theta exists",
            chain && brute_ok && sep_ok && certificate_ok ? Status::Pass : Status::Fail, wit);
    if (nd.disjoint) ++disjoint;
    const auto cpt = w.calc->compact_witness(t);
    const auto cocpt = w.calc->cocompact_witness(t);
    const auto fac = w.calc->fac_single_witness(t);
    if (cpt && cocpt && nd.disjoint)
      rep.add("bicompact-numdis-implies-ff", "bicompact and numerically disjoint implies functorially finite",
              fac ? Status::Pass : Status::WindowLimited,
              {{"class", c}, {"compact", item_json(w.cat, cpt)}, {"cocompact", item_json(w.cat, cocpt)},
               {"fac_generator", item_json(w.cat, fac)}});
    if (hereditary && cpt && cocpt)
      rep.add("hereditary-bicompact-implies-ff", "over a hereditary algebra a bicompact torsion class is functorially finite",
              fac ? Status::Pass : Status::WindowLimited,
              {{"class", c}, {"compact", item_json(w.cat, cpt)}, {"cocompact", item_json(w.cat, cocpt)},
               {"fac_generator", item_json(w.cat, fac)}});
  }
  rep.summary = {{"torsion_classes", classes.size()}, {"numerically_disjoint", disjoint}, {"hereditary", hereditary}};
  return rep;
}

SuiteReport run_brickfinite(const SuiteOptions& o) {
  auto alg = load_for(o, o.field);
  SuiteReport rep = start(o, *alg, "brickfinite");
  Window w(alg, o.bound, o.exec);
  const auto classes = w.calc->enumerate_torsion_classes();
  const AmpleCertificate ample = ample_certificate(alg, o.bound, o.exec);
  const bool finite = ample.stable();
  rep.add(finite ? "brick-count-stable" : "brick-count-grows",
          "brick and torsion class counts under raising the bound by one",
          finite ? Status::Pass : Status::WindowLimited,
          {{"bricks", {ample.bricks, ample.bricks_next}}, {"classes", {ample.classes, ample.classes_next}},
           {"next_bound", ample.next}});
  int all_ok = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    const SubcatSet& t = classes[c];
    const auto fac = w.calc->fac_single_witness(t);
    const auto cpt = w.calc->compact_witness(t);
    const auto cocpt = w.calc->cocompact_witness(t);
    const auto wg = w.calc->widely_generated(t);
    const bool ok = fac && cpt && cocpt && wg;
    if (ok) ++all_ok;
    json wit = {{"class", c}, {"fac_generator", item_json(w.cat, fac)}, {"compact", item_json(w.cat, cpt)},
                {"cocompact", item_json(w.cat, cocpt)}, {"semibrick", wg ? json(wg->members) : json(nullptr)}};
    if (finite)
      rep.add("brick-finite-classes", "every torsion class is functorially finite, bicompact, compact and widely generated",
              ok ? Status::Pass : Status::WindowLimited, wit);
  }
  rep.summary = {{"bricks", ample.bricks}, {"torsion_classes", classes.size()}, {"brick_finite_evidence", finite},
                 {"classes_with_all_predicates", all_ok}};
  return rep;
}

SuiteReport run_scan(const SuiteOptions& o) {
  const std::vector<int> fields = o.fields.empty() ? std::vector<int>{2, 3, 5} : o.fields;
  auto base = load_for(o, o.field);
  SuiteReport rep = start(o, *base, "scan");
  const int n = base->num_vertices();
  struct PerField {
    int p;
    std::unique_ptr<Window> w;
    MutationGraph graph;
  };
  std::vector<PerField> per;
  for (int p : fields) {
    auto alg = load_for(o, p);
    PerField pf{p, std::make_unique<Window>(alg, o.bound, o.exec), enumerate_silting(*alg, o.depth)};
    per.push_back(std::move(pf));
  }
  json table = json::array();
  for (const auto& th : lattice_grid(n, o.grid_lo, o.grid_hi)) {
    bool nonrigid = false;
    for (const auto& pf : per) nonrigid = nonrigid || rigidity(th, pf.graph).status != RigidityVerdict::Status::Rigid;
    if (!nonrigid) continue;
    json row = {{"theta", th.to_string()}};
    json sizes = json::object();
    bool ok = true, found_all = true;
    std::vector<int> seq;
    for (const auto& pf : per) {
      const Window& w = *pf.w;
      const RigidityVerdict v = rigidity(th, pf.graph);
      const auto q = semistable_quadruple(th, w.cat, o.exec);
      const auto s = w.calc->widely_generated(q.Tbar);
      json e = {{"verdict", to_string(v.status)}, {"depth", v.depth}};
      if (!s) {
        found_all = false;
        e["semibrick"] = nullptr;
      } else {
        bool orth = true;
        for (int a : s->members)
          for (int b : s->members)
            if (a != b) orth = orth && hom_vanishes_bruteforce(*w.alg, w.cat.item(a), w.cat.item(b));
        const bool gen = w.calc->t_of(w.calc->make(s->members)) == q.Tbar;
        ok = ok && orth && gen;
        json dims = json::array();
        for (int m : s->members) dims.push_back(w.cat.dims(m));
        e["semibrick"] = s->members;
        e["semibrick_dims"] = dims;
        e["size"] = s->members.size();
        e["hom_orthogonal"] = orth;
        e["generates_Tbar"] = gen;
        seq.push_back(static_cast<int>(s->members.size()));
      }
      sizes[std::to_string(pf.p)] = e;
    }
    const bool growth = found_all && seq.size() > 1 && std::is_sorted(seq.begin(), seq.end()) && seq.front() < seq.back();
    row["per_field"] = sizes;
    row["growth"] = growth;
    table.push_back(row);
    Status s = !ok ? Status::Fail : Status::WindowLimited;
    rep.add("non-rigid-semibrick-growth",
            "a non-rigid lattice theta has Tbar_theta generated by a semibrick, whose size grows with the field",
            s, row);
  }
  rep.summary = {{"fields", fields}, {"points", table.size()}, {"depth", o.depth}, {"grid", {o.grid_lo, o.grid_hi}}};
  return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "smalo")
    r = run_smalo(o);
  else if (name == "semistable")
    r = run_semistable(o);
  else if (name == "numdis")
    r = run_numdis(o);
  else if (name == "brickfinite")
    r = run_brickfinite(o);
  else if (name == "scan")
    r = run_scan(o);
  else
    throw std::invalid_argument("unknown suite " + name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace torslab
