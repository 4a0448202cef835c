#include "torslab/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "torslab/catalogue.hpp"

namespace torslab {

namespace {

bool elem_zero(const AlgElem& a) {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

AlgElem elem_add(const Fp& f, AlgElem a, const AlgElem& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

AlgElem elem_scale(const Fp& f, AlgElem a, Elem s) {
  for (auto& x : a) x = f.mul(x, s);
  return a;
}

// Position of each basis path inside its paths_between list.
std::vector<int> between_positions(const Algebra& alg) {
  std::vector<int> pos(alg.dim(), 0);
  const int nv = alg.num_vertices();
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) {
      const auto& ps = alg.paths_between(s, t);
      for (size_t k = 0; k < ps.size(); ++k) pos[ps[k]] = static_cast<int>(k);
    }
  return pos;
}

bool is_unit_entry(const Algebra& alg, const ProjMap& m, int r, int c) {
  return m.tgt[r] == m.src[c] && m.at(r, c)[alg.idempotent(m.src[c])] != 0;
}

AlgElem unit_inverse(const Algebra& alg, const AlgElem& u, int vertex) {
  const Fp& f = alg.field();
  const int e = alg.idempotent(vertex);
  const Elem lam_inv = f.inv(u[e]);
  AlgElem step = elem_scale(f, u, lam_inv);
  step[e] = 0;
  step = elem_scale(f, step, f.neg(1));  // -(lambda^{-1} u - e)
  AlgElem result = alg.unit_vector(e);
  AlgElem power = result;
  while (true) {
    power = alg.multiply(power, step);
    if (elem_zero(power)) break;
    result = elem_add(f, result, power);
  }
  return elem_scale(f, result, lam_inv);
}

ProjMap drop_row(const Algebra& alg, const ProjMap& m, int row) {
  std::vector<int> tgt = m.tgt;
  tgt.erase(tgt.begin() + row);
  ProjMap out = ProjMap::zero(alg, m.src, tgt);
  for (int r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (int c = 0; c < m.cols(); ++c) out.at(rr, c) = m.at(r, c);
    ++rr;
  }
  return out;
}

ProjMap drop_col(const Algebra& alg, const ProjMap& m, int col) {
  std::vector<int> src = m.src;
  src.erase(src.begin() + col);
  ProjMap out = ProjMap::zero(alg, src, m.tgt);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out.at(r, cc++) = m.at(r, c);
    }
  return out;
}

void eliminate(const Algebra& alg, ProjComplex& cx, size_t k, int row, int col) {
  const Fp& f = alg.field();
  const ProjMap& d = cx.diffs[k];
  const AlgElem uinv = unit_inverse(alg, d.at(row, col), d.src[col]);
  std::vector<int> src = d.src, tgt = d.tgt;
  src.erase(src.begin() + col);
  tgt.erase(tgt.begin() + row);
  ProjMap nd = ProjMap::zero(alg, src, tgt);
  for (int r = 0, rr = 0; r < d.rows(); ++r) {
    if (r == row) continue;
    const AlgElem gamma_u = alg.multiply(d.at(r, col), uinv);
    const bool skip = elem_zero(gamma_u);
    for (int c = 0, cc = 0; c < d.cols(); ++c) {
      if (c == col) continue;
      AlgElem v = d.at(r, c);
      if (!skip) {
        const AlgElem corr = alg.multiply(gamma_u, d.at(row, c));
        for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], corr[i]);
      }
      nd.at(rr, cc++) = std::move(v);
    }
    ++rr;
  }
  cx.diffs[k] = std::move(nd);
  if (k > 0) cx.diffs[k - 1] = drop_row(alg, cx.diffs[k - 1], col);
  if (k + 1 < cx.diffs.size()) cx.diffs[k + 1] = drop_col(alg, cx.diffs[k + 1], row);
  cx.terms[k].erase(cx.terms[k].begin() + col);
  cx.terms[k + 1].erase(cx.terms[k + 1].begin() + row);
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

ProjMap ProjMap::zero(const Algebra& alg, std::vector<int> src, std::vector<int> tgt) {
  ProjMap m;
  m.entries.assign(src.size() * tgt.size(), alg.zero());
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  return m;
}

ProjMap ProjMap::identity(const Algebra& alg, const std::vector<int>& vertices) {
  ProjMap m = zero(alg, vertices, vertices);
  for (size_t i = 0; i < vertices.size(); ++i) m.at(i, i) = alg.unit_vector(alg.idempotent(vertices[i]));
  return m;
}

bool ProjMap::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), elem_zero);
}

ProjMap compose(const Algebra& alg, const ProjMap& g, const ProjMap& f) {
  if (g.src != f.tgt) throw std::invalid_argument("compose: incompatible projective maps");
  const Fp& fld = alg.field();
  ProjMap out = ProjMap::zero(alg, f.src, g.tgt);
  for (int r = 0; r < g.rows(); ++r)
    for (int k = 0; k < g.cols(); ++k) {
      const AlgElem& a = g.at(r, k);
      if (elem_zero(a)) continue;
      for (int c = 0; c < f.cols(); ++c) {
        const AlgElem& b = f.at(k, c);
        if (elem_zero(b)) continue;
        out.at(r, c) = elem_add(fld, out.at(r, c), alg.multiply(a, b));
      }
    }
  return out;
}

ProjMap add(const Algebra& alg, const ProjMap& a, const ProjMap& b) {
  if (a.src != b.src || a.tgt != b.tgt) throw std::invalid_argument("add: incompatible projective maps");
  ProjMap out = a;
  for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = elem_add(alg.field(), a.entries[i], b.entries[i]);
  return out;
}

ProjMap negate(const Algebra& alg, const ProjMap& a) {
  ProjMap out = a;
  for (auto& e : out.entries) e = elem_scale(alg.field(), e, alg.field().neg(1));
  return out;
}

int proj_hom_dim(const Algebra& alg, const std::vector<int>& src, const std::vector<int>& tgt) {
  int n = 0;
  for (int t : tgt)
    for (int s : src) n += static_cast<int>(alg.paths_between(t, s).size());
  return n;
}

std::vector<Elem> flatten(const Algebra& alg, const ProjMap& m) {
  std::vector<Elem> v;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (int idx : alg.paths_between(m.tgt[r], m.src[c])) v.push_back(m.at(r, c)[idx]);
  return v;
}

ProjMap unflatten(const Algebra& alg, const std::vector<int>& src, const std::vector<int>& tgt, const std::vector<Elem>& v) {
  ProjMap m = ProjMap::zero(alg, src, tgt);
  size_t k = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (int idx : alg.paths_between(tgt[r], src[c])) m.at(r, c)[idx] = v.at(k++);
  if (k != v.size()) throw std::invalid_argument("unflatten: coordinate count mismatch");
  return m;
}

Representation projective_sum(const Algebra& alg, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(projective_module(alg, v));
  return direct_sum(parts, alg);
}

Representation injective_sum(const Algebra& alg, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(injective_module(alg, v));
  return direct_sum(parts, alg);
}

Morphism module_map(const Algebra& alg, const ProjMap& m) {
  const Fp& f = alg.field();
  const auto pos = between_positions(alg);
  Morphism out;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    std::vector<int> ro, co;
    int rows = 0, cols = 0;
    for (int t : m.tgt) {
      ro.push_back(rows);
      rows += static_cast<int>(alg.paths_between(t, v).size());
    }
    for (int s : m.src) {
      co.push_back(cols);
      cols += static_cast<int>(alg.paths_between(s, v).size());
    }
    Matrix mat(rows, cols);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const AlgElem& q = m.at(r, c);
        const auto& xs = alg.paths_between(m.src[c], v);
        for (int b = 0; b < alg.dim(); ++b) {
          if (q[b] == 0) continue;
          for (size_t k = 0; k < xs.size(); ++k)
            for (const auto& [idx, coeff] : alg.product(b, xs[k])) {
              Elem& e = mat(ro[r] + pos[idx], co[c] + static_cast<int>(k));
              e = f.add(e, f.mul(q[b], coeff));
            }
        }
      }
    out.push_back(std::move(mat));
  }
  return out;
}

Morphism nakayama_map(const Algebra& alg, const ProjMap& m) {
  const Fp& f = alg.field();
  const auto pos = between_positions(alg);
  Morphism out;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    std::vector<int> ro, co;
    int rows = 0, cols = 0;
    for (int t : m.tgt) {
      ro.push_back(rows);
      rows += static_cast<int>(alg.paths_between(v, t).size());
    }
    for (int s : m.src) {
      co.push_back(cols);
      cols += static_cast<int>(alg.paths_between(v, s).size());
    }
    Matrix mat(rows, cols);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const AlgElem& q = m.at(r, c);
        const auto& ys = alg.paths_between(v, m.tgt[r]);
        for (int b = 0; b < alg.dim(); ++b) {
          if (q[b] == 0) continue;
          for (size_t k = 0; k < ys.size(); ++k)
            for (const auto& [idx, coeff] : alg.product(ys[k], b)) {
              Elem& e = mat(ro[r] + static_cast<int>(k), co[c] + pos[idx]);
              e = f.add(e, f.mul(q[b], coeff));
            }
        }
      }
    out.push_back(std::move(mat));
  }
  return out;
}

TwoTermComplex TwoTermComplex::stalk0(const Algebra& alg, int vertex) {
  return {{}, {vertex}, ProjMap::zero(alg, {}, {vertex})};
}

TwoTermComplex TwoTermComplex::stalk1(const Algebra& alg, int vertex) {
  return {{vertex}, {}, ProjMap::zero(alg, {vertex}, {})};
}

IntVector TwoTermComplex::g_vector(int n) const {
  IntVector g(n, 0);
  for (int v : zero) ++g[v];
  for (int v : minus) --g[v];
  return g;
}

std::string TwoTermComplex::to_string(const Algebra& alg) const {
  auto side = [&](const std::vector<int>& vs) {
    if (vs.empty()) return std::string("0");
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "+" : "") + std::string("P") + alg.quiver().vertices[vs[i]];
    return s;
  };
  std::ostringstream out;
  out << side(minus) << " -> " << side(zero);
  if (!minus.empty() && !zero.empty()) {
    out << " [";
    for (int r = 0; r < d.rows(); ++r) {
      if (r) out << "; ";
      for (int c = 0; c < d.cols(); ++c) {
        if (c) out << ", ";
        std::string term;
        for (int b = 0; b < alg.dim(); ++b) {
          if (d.at(r, c)[b] == 0) continue;
          if (!term.empty()) term += "+";
          if (d.at(r, c)[b] != 1) term += std::to_string(d.at(r, c)[b]) + "*";
          term += alg.basis_string(b);
        }
        out << (term.empty() ? "0" : term);
      }
    }
    out << "]";
  }
  return out.str();
}

TwoTermComplex direct_sum(const Algebra& alg, const std::vector<TwoTermComplex>& parts) {
  TwoTermComplex out;
  for (const auto& p : parts) {
    out.minus = concat(out.minus, p.minus);
    out.zero = concat(out.zero, p.zero);
  }
  out.d = ProjMap::zero(alg, out.minus, out.zero);
  int r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.d.rows(); ++r)
      for (int c = 0; c < p.d.cols(); ++c) out.d.at(r0 + r, c0 + c) = p.d.at(r, c);
    r0 += p.d.rows();
    c0 += p.d.cols();
  }
  return out;
}

ProjComplex reduce(const Algebra& alg, ProjComplex c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < c.diffs.size() && !changed; ++k) {
      const ProjMap& d = c.diffs[k];
      for (int r = 0; r < d.rows() && !changed; ++r)
        for (int col = 0; col < d.cols() && !changed; ++col)
          if (is_unit_entry(alg, d, r, col)) {
            eliminate(alg, c, k, r, col);
            changed = true;
          }
    }
  }
  return c;
}

TwoTermComplex reduce(const Algebra& alg, const TwoTermComplex& u) {
  ProjComplex c{-1, {u.minus, u.zero}, {u.d}};
  c = reduce(alg, std::move(c));
  return {c.terms[0], c.terms[1], c.diffs[0]};
}

bool is_reduced(const Algebra& alg, const TwoTermComplex& u) {
  for (int r = 0; r < u.d.rows(); ++r)
    for (int c = 0; c < u.d.cols(); ++c)
      if (is_unit_entry(alg, u.d, r, c)) return false;
  return true;
}

ChainMap compose(const Algebra& alg, const ChainMap& g, const ChainMap& f) {
  return {compose(alg, g.minus, f.minus), compose(alg, g.zero, f.zero)};
}

std::vector<Elem> chain_coords(const Algebra& alg, const ChainMap& f) {
  std::vector<Elem> v = flatten(alg, f.minus);
  const auto z = flatten(alg, f.zero);
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

HomK hom_k(const Algebra& alg, const TwoTermComplex& x, const TwoTermComplex& y) {
  const Fp& f = alg.field();
  const int nm = proj_hom_dim(alg, x.minus, y.minus);
  const int n0 = proj_hom_dim(alg, x.zero, y.zero);
  const int n = nm + n0;
  const int rdim = proj_hom_dim(alg, x.minus, y.zero);
  auto unit = [](int size, int k) {
    std::vector<Elem> v(size, 0);
    v[k] = 1;
    return v;
  };
  HomK h;
  if (rdim == 0) {
    h.cycles = Matrix::identity(n);
  } else {
    Matrix cond(rdim, n);
    for (int j = 0; j < n; ++j) {
      ProjMap l = j < nm ? compose(alg, y.d, unflatten(alg, x.minus, y.minus, unit(nm, j)))
                         : negate(alg, compose(alg, unflatten(alg, x.zero, y.zero, unit(n0, j - nm)), x.d));
      const auto col = flatten(alg, l);
      for (int r = 0; r < rdim; ++r) cond(r, j) = col[r];
    }
    h.cycles = linalg::nullspace(f, cond);
  }
  const int hdim = proj_hom_dim(alg, x.zero, y.minus);
  Matrix bound(hdim, n);
  for (int k = 0; k < hdim; ++k) {
    const ProjMap hm = unflatten(alg, x.zero, y.minus, unit(hdim, k));
    const auto v = chain_coords(alg, {compose(alg, hm, x.d), compose(alg, y.d, hm)});
    for (int j = 0; j < n; ++j) bound(k, j) = v[j];
  }
  h.boundaries = linalg::rref(f, bound);
  linalg::Echelon acc = h.boundaries;
  for (int r = 0; r < h.cycles.rows(); ++r) {
    const auto z = h.cycles.row(r);
    const auto rem = linalg::reduce(f, acc, z);
    if (std::all_of(rem.begin(), rem.end(), [](Elem e) { return e == 0; })) continue;
    std::vector<Elem> zm(z.begin(), z.begin() + nm), z0(z.begin() + nm, z.end());
    h.basis.push_back({unflatten(alg, x.minus, y.minus, zm), unflatten(alg, x.zero, y.zero, z0)});
    Matrix row(1, n);
    for (int j = 0; j < n; ++j) row(0, j) = z[j];
    acc = linalg::rref(f, linalg::vstack(acc.reduced, row));
  }
  return h;
}

bool is_presilting(const Algebra& alg, const TwoTermComplex& u) {
  const Fp& f = alg.field();
  const int rdim = proj_hom_dim(alg, u.minus, u.zero);
  if (rdim == 0) return true;
  const int na = proj_hom_dim(alg, u.minus, u.minus);
  const int nb = proj_hom_dim(alg, u.zero, u.zero);
  Matrix img(na + nb, rdim);
  for (int k = 0; k < na + nb; ++k) {
    std::vector<Elem> e(k < na ? na : nb, 0);
    e[k < na ? k : k - na] = 1;
    const ProjMap v = k < na ? compose(alg, u.d, unflatten(alg, u.minus, u.minus, e))
                             : compose(alg, unflatten(alg, u.zero, u.zero, e), u.d);
    const auto col = flatten(alg, v);
    for (int j = 0; j < rdim; ++j) img(k, j) = col[j];
  }
  return linalg::rank(f, img) == rdim;
}

bool is_indecomposable(const Algebra& alg, const TwoTermComplex& u) {
  if (u.empty()) return false;
  if (!is_reduced(alg, u)) throw std::invalid_argument("is_indecomposable: complex not reduced");
  const Fp& f = alg.field();
  const HomK h = hom_k(alg, u, u);
  const int m1 = static_cast<int>(u.minus.size());
  const int s = m1 + static_cast<int>(u.zero.size());
  const int nm = proj_hom_dim(alg, u.minus, u.minus);
  // Semisimple quotient: keep the idempotent coefficient of each diagonal-vertex entry.
  Matrix tops(h.cycles.rows(), s * s);
  for (int r = 0; r < h.cycles.rows(); ++r) {
    const auto z = h.cycles.row(r);
    const ProjMap a = unflatten(alg, u.minus, u.minus, {z.begin(), z.begin() + nm});
    const ProjMap b = unflatten(alg, u.zero, u.zero, {z.begin() + nm, z.end()});
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        const bool lower = i >= m1;
        if ((j >= m1) != lower) continue;
        const ProjMap& mm = lower ? b : a;
        const int ii = lower ? i - m1 : i, jj = lower ? j - m1 : j;
        if (mm.tgt[ii] != mm.src[jj]) continue;
        tops(r, i * s + j) = mm.at(ii, jj)[alg.idempotent(mm.src[jj])];
      }
  }
  const auto basis = linalg::rref(f, tops);
  const int k = basis.reduced.rows();
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.p();
    if (total > kExhaustiveCap) throw IsoOverflow("is_indecomposable: endomorphism top too large");
  }
  const Matrix id = Matrix::identity(s);
  std::vector<Elem> c(k, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<Elem>(t % f.p());
      t /= f.p();
    }
    Matrix e(s, s);
    for (int i = 0; i < k; ++i)
      if (c[i])
        for (int q = 0; q < s * s; ++q) e.data()[q] = f.add(e.data()[q], f.mul(c[i], basis.reduced(i, q)));
    if (e.is_zero() || e == id) continue;
    if (linalg::multiply(f, e, e) == e) return false;
  }
  return true;
}

Representation nakayama_kernel(const Algebra& alg, const ProjMap& m) {
  const Representation i1 = injective_sum(alg, m.src);
  const Subspaces ker = kernel(alg.field(), nakayama_map(alg, m), i1.dims);
  return submodule(alg, i1, ker);
}

Cohomology cohomology(const Algebra& alg, const TwoTermComplex& u) {
  const Representation p0 = projective_sum(alg, u.zero);
  const Subspaces im = image(alg.field(), module_map(alg, u.d), p0.dims);
  return {quotient_module(alg, p0, im), nakayama_kernel(alg, u.d)};
}

}  // namespace torslab
