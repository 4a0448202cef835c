#include "torslab/silting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "torslab/catalogue.hpp"

namespace torslab {

namespace {

ProjMap stack_rows(const Algebra& alg, const std::vector<ProjMap>& parts, const std::vector<int>& src) {
  std::vector<int> tgt;
  for (const auto& p : parts) tgt.insert(tgt.end(), p.tgt.begin(), p.tgt.end());
  ProjMap out = ProjMap::zero(alg, src, tgt);
  int r0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) out.at(r0 + r, c) = p.at(r, c);
    r0 += p.rows();
  }
  return out;
}

ProjMap stack_cols(const Algebra& alg, const std::vector<ProjMap>& parts, const std::vector<int>& tgt) {
  std::vector<int> src;
  for (const auto& p : parts) src.insert(src.end(), p.src.begin(), p.src.end());
  ProjMap out = ProjMap::zero(alg, src, tgt);
  int c0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) out.at(r, c0 + c) = p.at(r, c);
    c0 += p.cols();
  }
  return out;
}

struct Component {
  int summand;
  ChainMap map;
};

// Does the span of `maps` together with null-homotopic maps exhaust Hom_K?
bool spans(const Algebra& alg, const HomK& h, const std::vector<ChainMap>& maps) {
  if (h.dim() == 0) return true;
  Matrix m = h.boundaries.reduced;
  for (const auto& c : maps) {
    const auto v = chain_coords(alg, c);
    Matrix row(1, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j) row(0, static_cast<int>(j)) = v[j];
    m = linalg::vstack(m, row);
  }
  return linalg::rank(alg.field(), m) == h.boundaries.reduced.rows() + h.dim();
}

std::vector<Component> minimize(const std::vector<Component>& all, const std::function<bool(const std::vector<Component>&)>& ok) {
  std::vector<Component> cur = all;
  for (size_t i = 0; i < cur.size();) {
    std::vector<Component> trial = cur;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (ok(trial))
      cur = std::move(trial);
    else
      ++i;
  }
  return cur;
}

std::optional<TwoTermComplex> left_mutant(const Algebra& alg, const std::vector<TwoTermComplex>& t, int k,
                                          const std::vector<std::vector<HomK>>& hk) {
  const int n = static_cast<int>(t.size());
  const TwoTermComplex& x = t[k];
  std::vector<Component> all;
  for (int j = 0; j < n; ++j)
    if (j != k)
      for (const auto& b : hk[k][j].basis) all.push_back({j, b});
  auto ok = [&](const std::vector<Component>& comps) {
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      std::vector<ChainMap> maps;
      for (const auto& c : comps)
        for (const auto& h : hk[c.summand][j].basis) maps.push_back(compose(alg, h, c.map));
      if (!spans(alg, hk[k][j], maps)) return false;
    }
    return true;
  };
  const auto comps = minimize(all, ok);
  std::vector<TwoTermComplex> es;
  std::vector<ProjMap> fm, f0;
  for (const auto& c : comps) {
    es.push_back(t[c.summand]);
    fm.push_back(c.map.minus);
    f0.push_back(c.map.zero);
  }
  const TwoTermComplex e = direct_sum(alg, es);
  const ProjMap f_minus = stack_rows(alg, fm, x.minus);
  const ProjMap f_zero = stack_rows(alg, f0, x.zero);
  ProjComplex cone;
  cone.lowest = -2;
  std::vector<int> mid = x.zero;
  mid.insert(mid.end(), e.minus.begin(), e.minus.end());
  cone.terms = {x.minus, mid, e.zero};
  ProjMap dm2 = stack_rows(alg, {negate(alg, x.d), f_minus}, x.minus);
  ProjMap dm1 = stack_cols(alg, {f_zero, e.d}, e.zero);
  cone.diffs = {dm2, dm1};
  cone = reduce(alg, std::move(cone));
  if (!cone.terms[0].empty()) return std::nullopt;
  return TwoTermComplex{cone.terms[1], cone.terms[2], cone.diffs[1]};
}

std::optional<TwoTermComplex> right_mutant(const Algebra& alg, const std::vector<TwoTermComplex>& t, int k,
                                           const std::vector<std::vector<HomK>>& hk) {
  const int n = static_cast<int>(t.size());
  const TwoTermComplex& y = t[k];
  std::vector<Component> all;
  for (int j = 0; j < n; ++j)
    if (j != k)
      for (const auto& b : hk[j][k].basis) all.push_back({j, b});
  auto ok = [&](const std::vector<Component>& comps) {
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      std::vector<ChainMap> maps;
      for (const auto& c : comps)
        for (const auto& h : hk[j][c.summand].basis) maps.push_back(compose(alg, c.map, h));
      if (!spans(alg, hk[j][k], maps)) return false;
    }
    return true;
  };
  const auto comps = minimize(all, ok);
  std::vector<TwoTermComplex> es;
  std::vector<ProjMap> gm, g0;
  for (const auto& c : comps) {
    es.push_back(t[c.summand]);
    gm.push_back(c.map.minus);
    g0.push_back(c.map.zero);
  }
  const TwoTermComplex e = direct_sum(alg, es);
  const ProjMap g_minus = stack_cols(alg, gm, y.minus);
  const ProjMap g_zero = stack_cols(alg, g0, y.zero);
  ProjComplex cone;
  cone.lowest = -2;
  std::vector<int> mid = e.zero;
  mid.insert(mid.end(), y.minus.begin(), y.minus.end());
  cone.terms = {e.minus, mid, y.zero};
  cone.diffs = {stack_rows(alg, {negate(alg, e.d), g_minus}, e.minus), stack_cols(alg, {g_zero, y.d}, y.zero)};
  cone = reduce(alg, std::move(cone));
  if (!cone.terms[2].empty()) return std::nullopt;
  return TwoTermComplex{cone.terms[0], cone.terms[1], cone.diffs[0]};
}

Rational to_rational(long long x) { return Rational(x); }

}  // namespace

SiltingComplex SiltingComplex::from_summands(int n, std::vector<TwoTermComplex> summands) {
  std::vector<std::pair<IntVector, TwoTermComplex>> tagged;
  for (auto& s : summands) tagged.emplace_back(s.g_vector(n), std::move(s));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SiltingComplex t;
  for (auto& [g, s] : tagged) {
    t.g_vectors.push_back(g);
    t.summands.push_back(std::move(s));
  }
  return t;
}

SiltingComplex initial_silting(const Algebra& alg) {
  std::vector<TwoTermComplex> s;
  for (int i = 0; i < alg.num_vertices(); ++i) s.push_back(TwoTermComplex::stalk0(alg, i));
  return SiltingComplex::from_summands(alg.num_vertices(), std::move(s));
}

SiltingComplex shifted_silting(const Algebra& alg) {
  std::vector<TwoTermComplex> s;
  for (int i = 0; i < alg.num_vertices(); ++i) s.push_back(TwoTermComplex::stalk1(alg, i));
  return SiltingComplex::from_summands(alg.num_vertices(), std::move(s));
}

SiltingComplex mutate(const Algebra& alg, const SiltingComplex& t, int k) {
  const int n = alg.num_vertices();
  if (static_cast<int>(t.summands.size()) != n || k < 0 || k >= n)
    throw MutationError("mutate: input is not a basic silting complex with " + std::to_string(n) + " summands");
  std::vector<std::vector<HomK>> hk(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hk[i].push_back(hom_k(alg, t.summands[i], t.summands[j]));
  std::optional<TwoTermComplex> c = left_mutant(alg, t.summands, k, hk);
  if (!c) c = right_mutant(alg, t.summands, k, hk);
  if (!c) throw MutationError("mutate: neither exchange triangle stays 2-term");
  if (!is_indecomposable(alg, *c)) throw MutationError("mutate: exchange cone decomposes");
  std::vector<TwoTermComplex> s = t.summands;
  s[k] = std::move(*c);
  SiltingComplex out = SiltingComplex::from_summands(n, std::move(s));
  if (!is_presilting(alg, out.total(alg))) throw MutationError("mutate: result is not presilting");
  return out;
}

MutationGraph enumerate_silting(const Algebra& alg, int depth) {
  if (depth < 0) throw std::invalid_argument("enumerate_silting: negative depth");
  const int n = alg.num_vertices();
  std::vector<SiltingComplex> verts{initial_silting(alg)};
  std::vector<int> level{0};
  std::map<std::vector<IntVector>, int> index{{verts[0].key(), 0}};
  std::set<MutationEdge> edges;
  bool complete = true;
  for (size_t v = 0; v < verts.size(); ++v) {
    for (int k = 0; k < n; ++k) {
      SiltingComplex m = mutate(alg, verts[v], k);
      auto it = index.find(m.key());
      if (it == index.end()) {
        if (level[v] >= depth) {
          complete = false;
          continue;
        }
        it = index.emplace(m.key(), static_cast<int>(verts.size())).first;
        verts.push_back(std::move(m));
        level.push_back(level[v] + 1);
      }
      edges.insert({static_cast<int>(v), it->second, k});
    }
  }
  // Canonical order by g-matrix.
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return verts[a].key() < verts[b].key(); });
  std::vector<int> rank(verts.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  MutationGraph g;
  g.depth = depth;
  g.complete = complete;
  for (int i : order) g.vertices.push_back(verts[i]);
  std::set<MutationEdge> remapped;
  for (const auto& e : edges) {
    // summand index refers to the sorted summand list of the source vertex
    remapped.insert({rank[e.from], rank[e.to], e.summand});
  }
  g.edges.assign(remapped.begin(), remapped.end());
  return g;
}

SiltingCone silting_cone(const SiltingComplex& t, bool open) {
  return {t.g_vectors, open};
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<IntVector>& rays, const StabilityVector& theta) {
  const int n = theta.size();
  const int m = static_cast<int>(rays.size());
  // Solve sum_j c_j rays[j] = theta; augmented n x (m+1).
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = to_rational(rays[j][i]);
    a[i][m] = theta.coords[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col] != Rational(0)) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;  // dependent rays
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < n; ++r)
      if (r != row && a[r][col] != Rational(0)) {
        const Rational f = a[r][col];
        for (int j = 0; j <= m; ++j) a[r][j] -= f * a[row][j];
      }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < m) return std::nullopt;
  for (int r = row; r < n; ++r)
    if (a[r][m] != Rational(0)) return std::vector<Rational>{};  // theta outside the span
  std::vector<Rational> c(m);
  for (int r = 0; r < m; ++r) c[pivot_col[r]] = a[r][m];
  return c;
}

bool in_open_cone(const std::vector<IntVector>& rays, const StabilityVector& theta) {
  if (rays.empty()) return std::all_of(theta.coords.begin(), theta.coords.end(), [](const Rational& x) { return x == Rational(0); });
  const auto c = coordinates_in(rays, theta);
  if (!c || c->empty()) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x > Rational(0); });
}

std::string to_string(RigidityVerdict::Status s) {
  switch (s) {
    case RigidityVerdict::Status::Rigid: return "rigid";
    case RigidityVerdict::Status::NotRigid: return "not-rigid";
    case RigidityVerdict::Status::Unknown: return "unknown";
  }
  return "unknown";
}

RigidityVerdict rigidity(const StabilityVector& theta, const MutationGraph& graph) {
  RigidityVerdict v;
  v.depth = graph.depth;
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& t = graph.vertices[i];
    const auto c = coordinates_in(t.g_vectors, theta);
    if (!c || c->empty()) continue;
    if (std::any_of(c->begin(), c->end(), [](const Rational& x) { return x < Rational(0); })) continue;
    for (size_t j = 0; j < c->size(); ++j)
      if ((*c)[j] > Rational(0)) {
        v.witness.push_back(t.summands[j]);
        v.witness_rays.push_back(t.g_vectors[j]);
      }
    v.status = RigidityVerdict::Status::Rigid;
    v.vertex = static_cast<int>(i);
    return v;
  }
  v.status = graph.complete ? RigidityVerdict::Status::NotRigid : RigidityVerdict::Status::Unknown;
  return v;
}

InducedPairs induced_torsion_pairs(const Algebra& alg, const TorsionCalculus& calc, const TwoTermComplex& u) {
  const Cohomology h = cohomology(alg, u);
  InducedPairs p{calc.left_perp_of_module(h.hminus1_nu), calc.fac_of_module(h.h0)};
  p.tbar.kind = p.t.kind = SubcatKind::Torsion;
  if (!p.t.subset_of(p.tbar)) throw std::logic_error("induced torsion pairs: T_U is not inside Tbar_U");
  return p;
}

std::vector<std::pair<int, int>> overlapping_chambers(const MutationGraph& graph) {
  std::vector<std::pair<int, int>> bad;
  const int nv = static_cast<int>(graph.vertices.size());
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (open_cones_intersect(graph.vertices[a].g_vectors, graph.vertices[b].g_vectors)) bad.emplace_back(a, b);
  return bad;
}

std::set<IntVector> exhaustive_presilting_gvectors(const Algebra& alg, int max_mult) {
  const int n = alg.num_vertices();
  const Fp& f = alg.field();
  std::set<IntVector> out;
  // Each vertex gets multiplicity in [-max_mult, max_mult]; positive in degree 0, negative in degree -1.
  IntVector g(n, -max_mult);
  while (true) {
    std::vector<int> minus, zero;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < std::abs(g[i]); ++k) (g[i] > 0 ? zero : minus).push_back(i);
    if (!minus.empty() || !zero.empty()) {
      const int dim = proj_hom_dim(alg, minus, zero);
      long long total = 1;
      for (int i = 0; i < dim; ++i) {
        total *= f.p();
        if (total > kExhaustiveCap) throw IsoOverflow("exhaustive_presilting_gvectors: map space too large");
      }
      std::vector<Elem> coords(dim, 0);
      for (long long idx = 0; idx < total && !out.count(g); ++idx) {
        long long t = idx;
        for (int i = 0; i < dim; ++i) {
          coords[i] = static_cast<Elem>(t % f.p());
          t /= f.p();
        }
        TwoTermComplex u{minus, zero, unflatten(alg, minus, zero, coords)};
        if (!is_presilting(alg, u)) continue;
        const TwoTermComplex r = reduce(alg, u);
        if (r.minus != minus || r.zero != zero) continue;
        if (is_indecomposable(alg, r)) out.insert(g);
      }
    }
    int i = n - 1;
    while (i >= 0 && g[i] == max_mult) g[i--] = -max_mult;
    if (i < 0) break;
    ++g[i];
  }
  return out;
}

}  // namespace torslab
