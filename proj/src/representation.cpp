#include "torslab/representation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torslab {

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

DimVector Subspaces::dims() const {
  DimVector d;
  for (const auto& b : basis) d.push_back(b.rows());
  return d;
}

Representation zero_module(const Algebra& alg) {
  Representation m;
  m.dims.assign(alg.num_vertices(), 0);
  for (int a = 0; a < alg.num_arrows(); ++a) m.maps.emplace_back(0, 0);
  return m;
}

Representation simple_module(const Algebra& alg, int vertex) {
  if (vertex < 0 || vertex >= alg.num_vertices()) throw std::out_of_range("invalid vertex " + std::to_string(vertex));
  Representation m;
  m.dims.assign(alg.num_vertices(), 0);
  m.dims[vertex] = 1;
  for (const auto& a : alg.quiver().arrows) m.maps.emplace_back(m.dims[a.target], m.dims[a.source]);
  return m;
}

Representation projective_module(const Algebra& alg, int vertex) {
  if (vertex < 0 || vertex >= alg.num_vertices()) throw std::out_of_range("invalid vertex " + std::to_string(vertex));
  const int nv = alg.num_vertices();
  Representation m;
  std::vector<std::vector<int>> pos(nv);
  for (int v = 0; v < nv; ++v) m.dims.push_back(static_cast<int>(alg.paths_between(vertex, v).size()));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const auto& src = alg.paths_between(vertex, arr.source);
    const auto& tgt = alg.paths_between(vertex, arr.target);
    Matrix mat(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t k = 0; k < src.size(); ++k)
      for (const auto& [idx, c] : alg.product(src[k], alg.arrow_index(a))) {
        auto it = std::find(tgt.begin(), tgt.end(), idx);
        mat(static_cast<int>(it - tgt.begin()), static_cast<int>(k)) = c;
      }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

Representation injective_module(const Algebra& alg, int vertex) {
  if (vertex < 0 || vertex >= alg.num_vertices()) throw std::out_of_range("invalid vertex " + std::to_string(vertex));
  const int nv = alg.num_vertices();
  Representation m;
  for (int v = 0; v < nv; ++v) m.dims.push_back(static_cast<int>(alg.paths_between(v, vertex).size()));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const auto& src = alg.paths_between(arr.source, vertex);
    const auto& tgt = alg.paths_between(arr.target, vertex);
    // (phi . a)(q) = phi(a q) for q a path from the arrow target to the vertex.
    Matrix mat(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t r = 0; r < tgt.size(); ++r)
      for (const auto& [idx, c] : alg.product(alg.arrow_index(a), tgt[r])) {
        auto it = std::find(src.begin(), src.end(), idx);
        mat(static_cast<int>(r), static_cast<int>(it - src.begin())) = c;
      }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation s;
  s.dims = add(a.dims, b.dims);
  for (size_t k = 0; k < a.maps.size(); ++k) {
    const Matrix& x = a.maps[k];
    const Matrix& y = b.maps[k];
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (int r = 0; r < y.rows(); ++r)
      for (int c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    s.maps.push_back(std::move(m));
  }
  return s;
}

Representation direct_sum(const std::vector<Representation>& parts, const Algebra& alg) {
  Representation s = zero_module(alg);
  for (const auto& p : parts) s = direct_sum(s, p);
  return s;
}

void check_shape(const Algebra& alg, const Representation& m) {
  if (static_cast<int>(m.dims.size()) != alg.num_vertices() || static_cast<int>(m.maps.size()) != alg.num_arrows())
    throw std::invalid_argument("representation does not match the quiver");
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const Matrix& mat = m.maps[a];
    const bool empty_ok = (m.dims[arr.target] == 0 || m.dims[arr.source] == 0) && mat.data().empty();
    if (!empty_ok && (mat.rows() != m.dims[arr.target] || mat.cols() != m.dims[arr.source]))
      throw std::invalid_argument("arrow matrix shape mismatch for " + arr.label);
  }
}

Matrix path_action(const Algebra& alg, const Representation& m, const Path& path) {
  const Fp& f = alg.field();
  Matrix acc = Matrix::identity(m.dims[path.source]);
  for (int a : path.arrows) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix step = m.maps[a];
    if (step.rows() != m.dims[arr.target] || step.cols() != m.dims[arr.source]) step = Matrix(m.dims[arr.target], m.dims[arr.source]);
    acc = linalg::multiply(f, step, acc);
  }
  return acc;
}

bool satisfies_relations(const Algebra& alg, const Representation& m) {
  const Fp& f = alg.field();
  for (const auto& rel : alg.quiver().relations) {
    Matrix total(m.dims[rel.target], m.dims[rel.source]);
    for (const auto& t : rel.terms) {
      Path p{rel.source, rel.target, t.arrows};
      total = linalg::add(f, total, linalg::scale(f, path_action(alg, m, p), t.coeff));
    }
    if (!total.is_zero()) return false;
  }
  return true;
}

namespace {

// Linear system for intertwiners M -> N. Unknown phi_v(r, c) sits at offset[v] + r * dM_v + c.
Matrix hom_system(const Algebra& alg, const Representation& m, const Representation& n, std::vector<int>& offset) {
  const Fp& f = alg.field();
  const int nv = alg.num_vertices();
  offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int eqs = 0;
  for (const auto& arr : alg.quiver().arrows) eqs += n.dims[arr.target] * m.dims[arr.source];
  Matrix sys(eqs, offset[nv]);
  int row = 0;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const int s = arr.source, t = arr.target;
    const Matrix& ma = m.maps[a];
    const Matrix& na = n.maps[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        // sum_k phi_t(r,k) M_a(k,c) - sum_k N_a(r,k) phi_s(k,c)
        for (int k = 0; k < m.dims[t]; ++k) {
          const Elem x = ma(k, c);
          if (x) sys(row, offset[t] + r * m.dims[t] + k) = f.add(sys(row, offset[t] + r * m.dims[t] + k), x);
        }
        for (int k = 0; k < n.dims[s]; ++k) {
          const Elem x = na(r, k);
          if (x) sys(row, offset[s] + k * m.dims[s] + c) = f.sub(sys(row, offset[s] + k * m.dims[s] + c), x);
        }
      }
  }
  return sys;
}

}  // namespace

std::vector<Morphism> hom_space(const Algebra& alg, const Representation& m, const Representation& n) {
  if (m.dims.size() != n.dims.size()) throw std::invalid_argument("hom_space: modules over different quivers");
  std::vector<int> offset;
  Matrix sys = hom_system(alg, m, n, offset);
  Matrix ns = linalg::nullspace(alg.field(), sys);
  const int nv = alg.num_vertices();
  std::vector<Morphism> basis;
  for (int k = 0; k < ns.rows(); ++k) {
    Morphism phi;
    for (int v = 0; v < nv; ++v) {
      Matrix pv(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) pv(r, c) = ns(k, offset[v] + r * m.dims[v] + c);
      phi.push_back(std::move(pv));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

int hom_dim(const Algebra& alg, const Representation& m, const Representation& n) {
  if (m.dims.size() != n.dims.size()) throw std::invalid_argument("hom_dim: modules over different quivers");
  std::vector<int> offset;
  Matrix sys = hom_system(alg, m, n, offset);
  return sys.cols() - linalg::rank(alg.field(), sys);
}

Morphism compose(const Fp& f, const Morphism& g, const Morphism& h) {
  Morphism out;
  for (size_t v = 0; v < g.size(); ++v) out.push_back(linalg::multiply(f, g[v], h[v]));
  return out;
}

Morphism combine(const Fp& f, const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs, const DimVector& src,
                 const DimVector& tgt) {
  Morphism out;
  for (size_t v = 0; v < src.size(); ++v) out.emplace_back(tgt[v], src[v]);
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k]) continue;
    for (size_t v = 0; v < src.size(); ++v) out[v] = linalg::add(f, out[v], linalg::scale(f, basis[k][v], coeffs[k]));
  }
  return out;
}

bool is_isomorphism(const Fp& f, const Morphism& phi) {
  for (const auto& m : phi)
    if (!linalg::is_invertible(f, m)) return false;
  return true;
}

bool is_zero(const Morphism& phi) {
  return std::all_of(phi.begin(), phi.end(), [](const Matrix& m) { return m.is_zero(); });
}

Subspaces zero_subspaces(const DimVector& dims) {
  Subspaces s;
  for (int d : dims) s.basis.emplace_back(0, d);
  return s;
}

Subspaces full_subspaces(const DimVector& dims) {
  Subspaces s;
  for (int d : dims) s.basis.push_back(Matrix::identity(d));
  return s;
}

namespace {

Matrix echelon_basis(const Fp& f, const Matrix& rows, int cols) {
  if (rows.rows() == 0) return Matrix(0, cols);
  return linalg::rref(f, rows).reduced;
}

std::vector<int> pivots_of(const Matrix& echelon) {
  std::vector<int> piv;
  for (int r = 0; r < echelon.rows(); ++r)
    for (int c = 0; c < echelon.cols(); ++c)
      if (echelon(r, c)) {
        piv.push_back(c);
        break;
      }
  return piv;
}

linalg::Echelon as_echelon(const Matrix& basis) { return {basis, pivots_of(basis)}; }

std::vector<Elem> column(const Matrix& m, int c) {
  std::vector<Elem> v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

}  // namespace

Subspaces kernel(const Fp& f, const Morphism& phi, const DimVector& src) {
  Subspaces s;
  for (size_t v = 0; v < src.size(); ++v) {
    if (src[v] == 0) {
      s.basis.emplace_back(0, 0);
      continue;
    }
    Matrix pv = phi[v];
    if (pv.cols() != src[v]) pv = Matrix(0, src[v]);
    s.basis.push_back(echelon_basis(f, linalg::nullspace(f, pv), src[v]));
  }
  return s;
}

Subspaces image(const Fp& f, const Morphism& phi, const DimVector& tgt) {
  Subspaces s;
  for (size_t v = 0; v < tgt.size(); ++v) {
    if (tgt[v] == 0 || phi[v].cols() == 0) {
      s.basis.emplace_back(0, tgt[v]);
      continue;
    }
    s.basis.push_back(echelon_basis(f, phi[v].transpose(), tgt[v]));
  }
  return s;
}

Subspaces sum(const Fp& f, const Subspaces& a, const Subspaces& b) {
  Subspaces s;
  for (size_t v = 0; v < a.basis.size(); ++v) {
    const int cols = std::max(a.basis[v].cols(), b.basis[v].cols());
    s.basis.push_back(echelon_basis(f, linalg::vstack(a.basis[v], b.basis[v]), cols));
  }
  return s;
}

Subspaces intersection(const Fp& f, const Subspaces& a, const Subspaces& b, const DimVector& dims) {
  // x in A cap B  <=>  x = u A = w B; solve [A; -B]^T-style via nullspace of the stacked system.
  Subspaces s;
  for (size_t v = 0; v < dims.size(); ++v) {
    const Matrix& x = a.basis[v];
    const Matrix& y = b.basis[v];
    if (x.rows() == 0 || y.rows() == 0) {
      s.basis.emplace_back(0, dims[v]);
      continue;
    }
    Matrix stacked = linalg::vstack(x, linalg::scale(f, y, f.neg(1)));  // rows
    Matrix ns = linalg::nullspace(f, stacked.transpose());             // coefficient vectors
    Matrix vecs(ns.rows(), dims[v]);
    for (int k = 0; k < ns.rows(); ++k)
      for (int r = 0; r < x.rows(); ++r)
        if (ns(k, r))
          for (int c = 0; c < dims[v]; ++c) vecs(k, c) = f.add(vecs(k, c), f.mul(ns(k, r), x(r, c)));
    s.basis.push_back(echelon_basis(f, vecs, dims[v]));
  }
  return s;
}

Subspaces generated_submodule(const Algebra& alg, const Representation& m, const std::vector<Matrix>& generators) {
  const Fp& f = alg.field();
  Subspaces s;
  for (size_t v = 0; v < m.dims.size(); ++v) s.basis.push_back(echelon_basis(f, generators[v], m.dims[v]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < alg.num_arrows(); ++a) {
      const auto& arr = alg.quiver().arrows[a];
      const Matrix& src = s.basis[arr.source];
      if (src.rows() == 0 || m.dims[arr.target] == 0) continue;
      Matrix imgs = linalg::multiply(f, src, m.maps[a].transpose());  // rows are M_a applied to basis rows
      Matrix merged = echelon_basis(f, linalg::vstack(s.basis[arr.target], imgs), m.dims[arr.target]);
      if (merged.rows() != s.basis[arr.target].rows()) {
        s.basis[arr.target] = std::move(merged);
        changed = true;
      }
    }
  }
  return s;
}

bool is_submodule(const Algebra& alg, const Representation& m, const Subspaces& s) {
  const Fp& f = alg.field();
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const Matrix& src = s.basis[arr.source];
    if (src.rows() == 0 || m.dims[arr.target] == 0) continue;
    Matrix imgs = linalg::multiply(f, src, m.maps[a].transpose());
    const auto e = as_echelon(s.basis[arr.target]);
    for (int r = 0; r < imgs.rows(); ++r)
      if (!linalg::in_row_space(f, e, imgs.row(r))) return false;
  }
  return true;
}

Representation submodule(const Algebra& alg, const Representation& m, const Subspaces& s) {
  if (!is_submodule(alg, m, s)) throw std::invalid_argument("subspaces are not arrow-stable");
  const Fp& f = alg.field();
  Representation out;
  out.dims = s.dims();
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const Matrix& src = s.basis[arr.source];
    const Matrix& tgt = s.basis[arr.target];
    Matrix mat(tgt.rows(), src.rows());
    if (src.rows() && tgt.rows()) {
      Matrix imgs = linalg::multiply(f, src, m.maps[a].transpose());
      const auto piv = pivots_of(tgt);
      for (int c = 0; c < src.rows(); ++c)
        for (int r = 0; r < tgt.rows(); ++r) mat(r, c) = imgs(c, piv[r]);
    }
    out.maps.push_back(std::move(mat));
  }
  return out;
}

Representation quotient_module(const Algebra& alg, const Representation& m, const Subspaces& s) {
  if (!is_submodule(alg, m, s)) throw std::invalid_argument("subspaces are not arrow-stable");
  const Fp& f = alg.field();
  const int nv = alg.num_vertices();
  std::vector<std::vector<int>> comp(nv);
  std::vector<linalg::Echelon> ech(nv);
  Representation out;
  for (int v = 0; v < nv; ++v) {
    ech[v] = as_echelon(s.basis[v].rows() ? s.basis[v] : Matrix(0, m.dims[v]));
    std::vector<char> piv(m.dims[v], 0);
    for (int c : ech[v].pivots) piv[c] = 1;
    for (int c = 0; c < m.dims[v]; ++c)
      if (!piv[c]) comp[v].push_back(c);
    out.dims.push_back(static_cast<int>(comp[v].size()));
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    const auto& cs = comp[arr.source];
    const auto& ct = comp[arr.target];
    Matrix mat(static_cast<int>(ct.size()), static_cast<int>(cs.size()));
    for (size_t j = 0; j < cs.size(); ++j) {
      auto y = linalg::reduce(f, ech[arr.target], column(m.maps[a], cs[j]));
      for (size_t i = 0; i < ct.size(); ++i) mat(static_cast<int>(i), static_cast<int>(j)) = y[ct[i]];
    }
    out.maps.push_back(std::move(mat));
  }
  return out;
}

Representation change_basis(const Algebra& alg, const Representation& m, const std::vector<Matrix>& g) {
  const Fp& f = alg.field();
  Representation out = m;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    if (m.dims[arr.source] == 0 || m.dims[arr.target] == 0) continue;
    auto inv = linalg::inverse(f, g[arr.source]);
    if (!inv) throw std::invalid_argument("change_basis: matrix not invertible");
    out.maps[a] = linalg::multiply(f, linalg::multiply(f, g[arr.target], m.maps[a]), *inv);
  }
  return out;
}

DimVector dim_vector(const Representation& m) { return m.dims; }

DimVector add(const DimVector& a, const DimVector& b) {
  DimVector c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

DimVector subtract(const DimVector& a, const DimVector& b) {
  DimVector c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool leq(const DimVector& a, const DimVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const DimVector& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<int> simple_endomorphism_dims(const Algebra& alg) {
  std::vector<int> c;
  for (int i = 0; i < alg.num_vertices(); ++i) {
    auto s = simple_module(alg, i);
    c.push_back(hom_dim(alg, s, s));
  }
  return c;
}

}  // namespace torslab
