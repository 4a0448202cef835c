#include "torslab/catalogue.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>

namespace torslab {

namespace {

long long checked_power(int p, int d) {
  long long v = 1;
  for (int k = 0; k < d; ++k) {
    v *= p;
    if (v > kExhaustiveCap) return kExhaustiveCap + 1;
  }
  return v;
}

// Advance a base-p counter; false once it wraps to zero.
bool next_coeffs(std::vector<Elem>& c, int p) {
  for (auto& x : c) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

int rank_of_columns(const Fp& f, const std::vector<Matrix>& mats, int rows) {
  Matrix acc(0, rows);
  for (const auto& m : mats)
    if (m.rows() == rows && m.cols() > 0) acc = linalg::vstack(acc, m.transpose());
  return linalg::rank(f, acc);
}

std::vector<Elem> subspace_code(const Subspaces& s) {
  std::vector<Elem> code;
  for (const auto& b : s.basis) {
    code.push_back(static_cast<Elem>(b.rows()));
    code.insert(code.end(), b.data().begin(), b.data().end());
  }
  return code;
}

// A finite division algebra is a field, so End(M) must be commutative; a commutative
// F_p-algebra is a field iff Frobenius is injective and fixes only the prime field.
bool is_division_algebra(const Fp& f, const std::vector<Morphism>& basis) {
  const int d = static_cast<int>(basis.size());
  auto flatten = [](const Morphism& m) {
    std::vector<Elem> v;
    for (const auto& x : m) v.insert(v.end(), x.data().begin(), x.data().end());
    return v;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (flatten(compose(f, basis[i], basis[j])) != flatten(compose(f, basis[j], basis[i]))) return false;
  const int len = static_cast<int>(flatten(basis[0]).size());
  // Coordinates of phi_i^p: solve against the basis (columns) via an augmented echelon form.
  Matrix sys(len, d + d);
  for (int i = 0; i < d; ++i) {
    auto v = flatten(basis[i]);
    Morphism pw = basis[i];
    for (int k = 1; k < f.p(); ++k) pw = compose(f, pw, basis[i]);
    auto w = flatten(pw);
    for (int r = 0; r < len; ++r) {
      sys(r, i) = v[r];
      sys(r, d + i) = w[r];
    }
  }
  auto e = linalg::rref(f, sys);
  Matrix frob(d, d);  // column i = coordinates of phi_i^p
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= d) throw std::logic_error("endomorphism space not closed under composition");
    for (int i = 0; i < d; ++i) frob(e.pivots[r], i) = e.reduced(static_cast<int>(r), d + i);
  }
  if (linalg::rank(f, frob) < d) return false;
  Matrix fixed = linalg::subtract(f, frob, Matrix::identity(d));
  return d - linalg::rank(f, fixed) == 1;
}

}  // namespace

ModuleKey module_key(const Algebra& alg, const Representation& m, const std::vector<Representation>& probes) {
  const Fp& f = alg.field();
  ModuleKey key(m.dims.begin(), m.dims.end());
  key.push_back(hom_dim(alg, m, m));
  for (const auto& a : m.maps) key.push_back(a.empty() ? 0 : linalg::rank(f, a));
  for (int v = 0; v < alg.num_vertices(); ++v) {
    std::vector<Matrix> into, out;
    for (int a = 0; a < alg.num_arrows(); ++a) {
      const auto& arr = alg.quiver().arrows[a];
      if (arr.target == v) into.push_back(m.maps[a]);
      if (arr.source == v && m.dims[arr.target] > 0) out.push_back(m.maps[a]);
    }
    key.push_back(m.dims[v] - rank_of_columns(f, into, m.dims[v]));  // top
    Matrix stacked(0, m.dims[v]);
    for (const auto& o : out)
      if (o.cols() == m.dims[v]) stacked = linalg::vstack(stacked, o);
    key.push_back(m.dims[v] - (stacked.rows() ? linalg::rank(f, stacked) : 0));  // socle
  }
  for (const auto& pr : probes) {
    key.push_back(hom_dim(alg, pr, m));
    key.push_back(hom_dim(alg, m, pr));
  }
  return key;
}

bool is_isomorphic(const Algebra& alg, const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const Fp& f = alg.field();
  auto basis = hom_space(alg, m, n);
  const int d = static_cast<int>(basis.size());
  if (d == 0 || d != hom_dim(alg, m, m) || d != hom_dim(alg, n, m)) return false;
  std::mt19937 rng(0x5eed + d);
  std::uniform_int_distribution<int> pick(0, f.p() - 1);
  std::vector<Elem> c(d);
  for (int trial = 0; trial < 64; ++trial) {
    for (auto& x : c) x = static_cast<Elem>(pick(rng));
    if (is_isomorphism(f, combine(f, basis, c, m.dims, n.dims))) return true;
  }
  if (checked_power(f.p(), d) > kExhaustiveCap)
    throw IsoOverflow("isomorphism test needs " + std::to_string(f.p()) + "^" + std::to_string(d) + " candidates");
  std::fill(c.begin(), c.end(), 0);
  while (next_coeffs(c, f.p()))
    if (is_isomorphism(f, combine(f, basis, c, m.dims, n.dims))) return true;
  return false;
}

bool is_brick(const Algebra& alg, const Representation& m) {
  if (m.total_dim() == 0) return false;
  const Fp& f = alg.field();
  auto basis = hom_space(alg, m, m);
  const int d = static_cast<int>(basis.size());
  if (d == 1) return true;
  if (checked_power(f.p(), d) > kExhaustiveCap) return is_division_algebra(f, basis);
  std::vector<Elem> c(d, 0);
  while (next_coeffs(c, f.p())) {
    auto lead = std::find_if(c.begin(), c.end(), [](Elem x) { return x != 0; });
    if (*lead != 1) continue;  // scalar multiples share invertibility
    if (!is_isomorphism(f, combine(f, basis, c, m.dims, m.dims))) return false;
  }
  return true;
}

std::vector<Subspaces> enumerate_submodules(const Algebra& alg, const Representation& m) {
  const Fp& f = alg.field();
  const int nv = alg.num_vertices();
  std::vector<Subspaces> cyclic;
  std::set<std::vector<Elem>> cyclic_seen;
  for (int v = 0; v < nv; ++v) {
    std::vector<Elem> x(m.dims[v], 0);
    while (next_coeffs(x, f.p())) {
      auto lead = std::find_if(x.begin(), x.end(), [](Elem e) { return e != 0; });
      if (*lead != 1) continue;
      std::vector<Matrix> gens;
      for (int w = 0; w < nv; ++w) gens.emplace_back(0, m.dims[w]);
      Matrix row(1, m.dims[v]);
      for (int k = 0; k < m.dims[v]; ++k) row(0, k) = x[k];
      gens[v] = row;
      auto s = generated_submodule(alg, m, gens);
      if (cyclic_seen.insert(subspace_code(s)).second) cyclic.push_back(std::move(s));
    }
  }
  std::vector<Subspaces> all{zero_subspaces(m.dims)};
  std::set<std::vector<Elem>> seen{subspace_code(all[0])};
  for (size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      auto s = sum(f, all[i], c);
      if (seen.insert(subspace_code(s)).second) all.push_back(std::move(s));
    }
  std::stable_sort(all.begin(), all.end(), [](const Subspaces& a, const Subspaces& b) {
    auto da = a.dims(), db = b.dims();
    int ta = 0, tb = 0;
    for (int x : da) ta += x;
    for (int x : db) tb += x;
    return ta != tb ? ta < tb : da < db;
  });
  return all;
}

std::vector<DimVector> submodule_dimvectors(const Algebra& alg, const Representation& m) {
  std::set<DimVector> out;
  for (const auto& s : enumerate_submodules(alg, m)) out.insert(s.dims());
  return {out.begin(), out.end()};
}

std::vector<DimVector> quotient_dimvectors(const Algebra& alg, const Representation& m) {
  std::set<DimVector> out;
  for (const auto& v : submodule_dimvectors(alg, m)) out.insert(subtract(m.dims, v));
  return {out.begin(), out.end()};
}

std::vector<Representation> extension_middles(const Algebra& alg, const Representation& x, const Representation& y) {
  const Fp& f = alg.field();
  const int nv = alg.num_vertices();
  const int na = alg.num_arrows();
  std::vector<int> off(na + 1, 0);
  for (int a = 0; a < na; ++a) {
    const auto& arr = alg.quiver().arrows[a];
    off[a + 1] = off[a] + y.dims[arr.target] * x.dims[arr.source];
  }
  const int unknowns = off[na];

  auto middle = [&](const std::vector<Elem>& xi) {
    Representation e;
    e.dims = add(y.dims, x.dims);
    for (int a = 0; a < na; ++a) {
      const auto& arr = alg.quiver().arrows[a];
      const int ys = y.dims[arr.source], yt = y.dims[arr.target];
      const int xs = x.dims[arr.source], xt = x.dims[arr.target];
      Matrix mat(yt + xt, ys + xs);
      for (int r = 0; r < yt; ++r)
        for (int c = 0; c < ys; ++c) mat(r, c) = y.maps[a](r, c);
      for (int r = 0; r < xt; ++r)
        for (int c = 0; c < xs; ++c) mat(yt + r, ys + c) = x.maps[a](r, c);
      for (int r = 0; r < yt; ++r)
        for (int c = 0; c < xs; ++c) mat(r, ys + c) = xi[off[a] + r * xs + c];
      e.maps.push_back(std::move(mat));
    }
    return e;
  };

  // Cocycle condition: the off-diagonal block of every relation vanishes; it is linear in xi.
  int eqs = 0;
  for (const auto& rel : alg.quiver().relations) eqs += y.dims[rel.target] * x.dims[rel.source];
  Matrix cons(eqs, unknowns);
  for (int u = 0; u < unknowns; ++u) {
    std::vector<Elem> xi(unknowns, 0);
    xi[u] = 1;
    Representation e = middle(xi);
    int row = 0;
    for (const auto& rel : alg.quiver().relations) {
      Matrix total(e.dims[rel.target], e.dims[rel.source]);
      for (const auto& t : rel.terms)
        total = linalg::add(f, total, linalg::scale(f, path_action(alg, e, Path{rel.source, rel.target, t.arrows}), t.coeff));
      for (int r = 0; r < y.dims[rel.target]; ++r)
        for (int c = 0; c < x.dims[rel.source]; ++c) cons(row++, u) = total(r, y.dims[rel.source] + c);
    }
  }
  Matrix cocycles = eqs ? linalg::nullspace(f, cons) : Matrix::identity(unknowns);

  // Coboundaries xi_a = Y_a h_s - h_t X_a.
  std::vector<std::vector<Elem>> cob;
  for (int v = 0; v < nv; ++v)
    for (int r = 0; r < y.dims[v]; ++r)
      for (int c = 0; c < x.dims[v]; ++c) {
        std::vector<Elem> xi(unknowns, 0);
        for (int a = 0; a < na; ++a) {
          const auto& arr = alg.quiver().arrows[a];
          const int xs = x.dims[arr.source];
          if (arr.source == v)  // (Y_a h)(rr, c) = Y_a(rr, r)
            for (int rr = 0; rr < y.dims[arr.target]; ++rr)
              xi[off[a] + rr * xs + c] = f.add(xi[off[a] + rr * xs + c], y.maps[a](rr, r));
          if (arr.target == v)  // (h X_a)(r, cc) = X_a(c, cc)
            for (int cc = 0; cc < xs; ++cc) xi[off[a] + r * xs + cc] = f.sub(xi[off[a] + r * xs + cc], x.maps[a](c, cc));
        }
        cob.push_back(std::move(xi));
      }
  Matrix span(0, unknowns);
  for (const auto& v : cob) {
    Matrix row(1, unknowns);
    for (int k = 0; k < unknowns; ++k) row(0, k) = v[k];
    span = linalg::vstack(span, row);
  }
  std::vector<std::vector<Elem>> reps;
  auto ech = span.rows() ? linalg::rref(f, span) : linalg::Echelon{Matrix(0, unknowns), {}};
  for (int k = 0; k < cocycles.rows(); ++k) {
    auto v = linalg::reduce(f, ech, cocycles.row(k));
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
    reps.push_back(v);
    Matrix row(1, unknowns);
    for (int j = 0; j < unknowns; ++j) row(0, j) = v[j];
    ech = linalg::rref(f, linalg::vstack(ech.reduced, row));
  }
  const int m = static_cast<int>(reps.size());
  if (checked_power(f.p(), m) > kExhaustiveCap)
    throw IsoOverflow("Ext^1 too large to enumerate: " + std::to_string(f.p()) + "^" + std::to_string(m));
  std::vector<Representation> out{middle(std::vector<Elem>(unknowns, 0))};
  std::vector<Elem> c(m, 0);
  while (next_coeffs(c, f.p())) {
    auto lead = std::find_if(c.begin(), c.end(), [](Elem e) { return e != 0; });
    if (*lead != 1) continue;
    std::vector<Elem> xi(unknowns, 0);
    for (int k = 0; k < m; ++k)
      if (c[k])
        for (int j = 0; j < unknowns; ++j) xi[j] = f.add(xi[j], f.mul(c[k], reps[k][j]));
    out.push_back(middle(xi));
  }
  return out;
}

ExtensionResult extensions(const Algebra& alg, const Representation& x, const Representation& y, const DimVector* bound) {
  ExtensionResult res;
  std::vector<Representation> uniq;
  for (auto& e : extension_middles(alg, x, y)) {
    bool dup = false;
    for (const auto& u : uniq)
      if (is_isomorphic(alg, u, e)) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(std::move(e));
  }
  if (bound && !leq(add(x.dims, y.dims), *bound)) {
    res.truncated = true;
    res.dropped = static_cast<int>(uniq.size());
    return res;
  }
  res.middle = std::move(uniq);
  return res;
}

std::vector<DimVector> dims_below(const DimVector& bound) {
  std::vector<DimVector> out;
  DimVector d(bound.size(), 0);
  while (true) {
    out.push_back(d);
    int k = static_cast<int>(d.size()) - 1;
    while (k >= 0 && d[k] == bound[k]) d[k--] = 0;
    if (k < 0) return out;
    ++d[k];
  }
}

namespace {

std::string hex_fingerprint(const ModuleKey& key, int ordinal) {
  unsigned long long h = 1469598103934665603ULL;
  for (int v : key) {
    for (int b = 0; b < 4; ++b) {
      h ^= static_cast<unsigned long long>((v >> (8 * b)) & 0xff);
      h *= 1099511628211ULL;
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx-%d", h, ordinal);
  return buf;
}

std::vector<Representation> standard_probes(const Algebra& alg) {
  std::vector<Representation> probes;
  for (int i = 0; i < alg.num_vertices(); ++i) probes.push_back(simple_module(alg, i));
  for (int i = 0; i < alg.num_vertices(); ++i) probes.push_back(projective_module(alg, i));
  for (int i = 0; i < alg.num_vertices(); ++i) probes.push_back(injective_module(alg, i));
  return probes;
}

}  // namespace

Catalogue Catalogue::enumerate(std::shared_ptr<const Algebra> alg_ptr, DimVector bound, int budget) {
  const Algebra& alg = *alg_ptr;
  if (static_cast<int>(bound.size()) != alg.num_vertices()) throw std::invalid_argument("bound length does not match the quiver");
  int cost = 0;
  for (const auto& arr : alg.quiver().arrows) cost += bound[arr.source] * bound[arr.target];
  if (cost > budget)
    throw BudgetExceeded("enumeration budget exceeded at dims " + to_string(bound) + ": " + std::to_string(cost) + " > " +
                         std::to_string(budget));

  Catalogue cat;
  cat.alg_ = alg_ptr;
  cat.bound_ = bound;
  cat.probes_ = standard_probes(alg);
  cat.simple_ends_ = simple_endomorphism_dims(alg);

  struct Found {
    Representation rep;
    ModuleKey key;
  };
  std::vector<Found> found;
  std::map<ModuleKey, std::vector<int>> buckets;  // key starts with dims
  std::map<DimVector, std::vector<int>> by_dims;

  auto add_if_new = [&](Representation e) {
    ModuleKey key = module_key(alg, e, cat.probes_);
    auto& bucket = buckets[key];
    for (int j : bucket)
      if (is_isomorphic(alg, found[j].rep, e)) return;
    bucket.push_back(static_cast<int>(found.size()));
    by_dims[e.dims].push_back(static_cast<int>(found.size()));
    found.push_back({std::move(e), std::move(key)});
  };

  add_if_new(zero_module(alg));
  auto all_dims = dims_below(bound);
  std::stable_sort(all_dims.begin(), all_dims.end(), [](const DimVector& a, const DimVector& b) {
    int ta = 0, tb = 0;
    for (int x : a) ta += x;
    for (int x : b) tb += x;
    return ta < tb;
  });
  for (const auto& d : all_dims) {
    for (int i = 0; i < alg.num_vertices(); ++i) {
      if (d[i] == 0) continue;
      DimVector prev = d;
      --prev[i];
      auto it = by_dims.find(prev);
      if (it == by_dims.end()) continue;
      const auto simple = simple_module(alg, i);
      const std::vector<int> lowers = it->second;
      for (int li : lowers)
        for (auto& e : extension_middles(alg, simple, found[li].rep)) add_if_new(std::move(e));
    }
  }

  std::vector<int> perm(found.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return found[a].key < found[b].key; });
  std::map<ModuleKey, int> ordinal;
  for (int idx : perm) {
    const int ord = ordinal[found[idx].key]++;
    cat.fingerprints_.push_back(hex_fingerprint(found[idx].key, ord));
    cat.items_.push_back(found[idx].rep);
    cat.keys_.push_back(found[idx].key);
  }
  const int n = cat.size();
  cat.end_dims_.resize(n);
  cat.bricks_.resize(n);
  cat.subdims_.resize(n);
  for (int i = 0; i < n; ++i) {
    cat.end_dims_[i] = cat.keys_[i][alg.num_vertices()];
    cat.bricks_[i] = is_brick(alg, cat.items_[i]);
    cat.subdims_[i] = submodule_dimvectors(alg, cat.items_[i]);
  }
  cat.order_.resize(n);
  for (int i = 0; i < n; ++i) cat.order_[i] = i;
  std::stable_sort(cat.order_.begin(), cat.order_.end(),
                   [&](int a, int b) { return cat.items_[a].total_dim() < cat.items_[b].total_dim(); });
  cat.filtrations_.resize(n);
  return cat;
}

std::optional<int> Catalogue::find(const Representation& m) const {
  if (!leq(m.dims, bound_)) return std::nullopt;
  ModuleKey key = module_key(*alg_, m, probes_);
  auto lo = std::lower_bound(keys_.begin(), keys_.end(), key);
  for (auto it = lo; it != keys_.end() && *it == key; ++it) {
    const int idx = static_cast<int>(it - keys_.begin());
    if (is_isomorphic(*alg_, items_[idx], m)) return idx;
  }
  throw std::logic_error("module of dims " + to_string(m.dims) + " missing from catalogue");
}

std::vector<DimVector> Catalogue::quotient_dims(int i) const {
  std::set<DimVector> out;
  for (const auto& v : subdims_[i]) out.insert(subtract(items_[i].dims, v));
  return {out.begin(), out.end()};
}

const std::vector<std::pair<int, int>>& Catalogue::filtration_pairs(int i) const {
  auto& slot = filtrations_[i];
  if (!slot) {
    std::set<std::pair<int, int>> pairs;
    const auto& m = items_[i];
    for (const auto& s : enumerate_submodules(*alg_, m)) {
      const auto d = s.dims();
      if (d == DimVector(d.size(), 0) || d == m.dims) continue;
      auto sub = *find(submodule(*alg_, m, s));
      auto quo = *find(quotient_module(*alg_, m, s));
      pairs.insert({sub, quo});
    }
    slot.emplace(pairs.begin(), pairs.end());
  }
  return *slot;
}

std::vector<Representation> enumerate_modules_bruteforce(const Algebra& alg, const DimVector& bound) {
  const Fp& f = alg.field();
  std::vector<Representation> reps;
  for (const auto& d : dims_below(bound)) {
    int entries = 0;
    for (const auto& arr : alg.quiver().arrows) entries += d[arr.target] * d[arr.source];
    std::vector<Representation> local;
    std::vector<Elem> c(entries, 0);
    do {
      Representation m;
      m.dims = d;
      int pos = 0;
      for (const auto& arr : alg.quiver().arrows) {
        Matrix mat(d[arr.target], d[arr.source]);
        for (auto& e : mat.data()) e = c[pos++];
        m.maps.push_back(std::move(mat));
      }
      if (!satisfies_relations(alg, m)) continue;
      bool dup = false;
      for (const auto& r : local)
        if (is_isomorphic(alg, r, m)) {
          dup = true;
          break;
        }
      if (!dup) local.push_back(std::move(m));
    } while (next_coeffs(c, f.p()));
    reps.insert(reps.end(), local.begin(), local.end());
  }
  return reps;
}

std::vector<BrickRecord> enumerate_bricks(const Catalogue& cat) {
  std::vector<BrickRecord> out;
  for (int i = 0; i < cat.size(); ++i)
    if (cat.brick(i)) out.push_back({i, cat.end_dim(i)});
  return out;
}

bool is_semibrick(const Catalogue& cat, const std::vector<int>& members) {
  const Algebra& alg = cat.algebra();
  for (size_t a = 0; a < members.size(); ++a) {
    if (!cat.brick(members[a])) return false;
    for (size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] == members[b]) return false;
      if (hom_dim(alg, cat.item(members[a]), cat.item(members[b])) ||
          hom_dim(alg, cat.item(members[b]), cat.item(members[a])))
        return false;
    }
  }
  return true;
}

std::vector<Semibrick> enumerate_semibricks(const Catalogue& cat, int max_size) {
  const Algebra& alg = cat.algebra();
  std::vector<int> bricks;
  for (const auto& b : enumerate_bricks(cat)) bricks.push_back(b.index);
  const int nb = static_cast<int>(bricks.size());
  std::vector<std::vector<char>> orth(nb, std::vector<char>(nb, 0));
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b)
      orth[a][b] = orth[b][a] = hom_dim(alg, cat.item(bricks[a]), cat.item(bricks[b])) == 0 &&
                                hom_dim(alg, cat.item(bricks[b]), cat.item(bricks[a])) == 0;
  std::vector<Semibrick> out;
  std::vector<int> chosen;
  auto maximal = [&]() {
    for (int c = 0; c < nb; ++c) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      if (std::all_of(chosen.begin(), chosen.end(), [&](int x) { return orth[x][c]; })) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    Semibrick s;
    for (int c : chosen) s.members.push_back(bricks[c]);
    s.maximal = maximal();
    out.push_back(std::move(s));
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (int c = start; c < nb; ++c) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](int x) { return orth[x][c]; })) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace torslab
