#include "torslab/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace torslab {

std::vector<int> hom_dim_table(const Catalogue& cat, Exec exec) {
  const int n = cat.size();
  const Algebra& alg = cat.algebra();
  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i * n + j] = hom_dim(alg, cat.item(i), cat.item(j));
    return table;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (long long ij = 0; ij < static_cast<long long>(n) * n; ++ij) {
    const int i = static_cast<int>(ij / n), j = static_cast<int>(ij % n);
    table[ij] = hom_dim(alg, cat.item(i), cat.item(j));
  }
  return table;
}

namespace {

void trace_entry(const Catalogue& cat, int g, int x, TraceTables& t) {
  const Algebra& alg = cat.algebra();
  const Fp& f = alg.field();
  const auto& mg = cat.item(g);
  const auto& mx = cat.item(x);
  const size_t at = static_cast<size_t>(g) * t.n + x;
  Subspaces tr = zero_subspaces(mx.dims);
  for (const auto& phi : hom_space(alg, mg, mx)) tr = sum(f, tr, image(f, phi, mx.dims));
  Subspaces rj = full_subspaces(mx.dims);
  for (const auto& phi : hom_space(alg, mx, mg)) rj = intersection(f, rj, kernel(f, phi, mx.dims), mx.dims);
  t.fac[at] = tr.dims() == mx.dims;
  t.sub[at] = rj.dims() == DimVector(mx.dims.size(), 0);
  t.trace[at] = std::move(tr);
  t.reject[at] = std::move(rj);
}

}  // namespace

TraceTables trace_tables(const Catalogue& cat, Exec exec) {
  TraceTables t;
  const int n = cat.size();
  t.n = n;
  const size_t total = static_cast<size_t>(n) * n;
  t.trace.resize(total);
  t.reject.resize(total);
  t.fac.assign(total, 0);
  t.sub.assign(total, 0);
  if (exec == Exec::Serial) {
    for (int g = 0; g < n; ++g)
      for (int x = 0; x < n; ++x) trace_entry(cat, g, x, t);
    return t;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (long long gx = 0; gx < static_cast<long long>(total); ++gx) trace_entry(cat, static_cast<int>(gx / n), static_cast<int>(gx % n), t);
  return t;
}

bool membership(const StabilityVector& theta, const DimVector& dims, const std::vector<DimVector>& subdims,
                const std::vector<int>& end_dims, Which which) {
  const DimVector zero(dims.size(), 0);
  for (const auto& s : subdims) {
    if (which == Which::T || which == Which::Tbar) {
      const DimVector q = subtract(dims, s);
      const Rational v = euler_pairing(theta, q, end_dims);
      if (which == Which::Tbar && v < 0) return false;
      if (which == Which::T && q != zero && v <= 0) return false;
    } else {
      const Rational v = euler_pairing(theta, s, end_dims);
      if (which == Which::Fbar && v > 0) return false;
      if (which == Which::F && s != zero && v >= 0) return false;
    }
  }
  return true;
}

std::vector<char> membership_sweep(const Catalogue& cat, const std::vector<StabilityVector>& thetas, Which which, Exec exec) {
  const int n = cat.size();
  const long long total = static_cast<long long>(thetas.size()) * n;
  std::vector<char> out(total, 0);
  auto one = [&](long long ti) {
    const int t = static_cast<int>(ti / n), i = static_cast<int>(ti % n);
    out[ti] = membership(thetas[t], cat.dims(i), cat.submodule_dims(i), cat.simple_end_dims(), which);
  };
  if (exec == Exec::Serial) {
    for (long long ti = 0; ti < total; ++ti) one(ti);
  } else {
#pragma omp parallel for schedule(static)
    for (long long ti = 0; ti < total; ++ti) one(ti);
  }
  return out;
}

namespace {

// Full column rank of a small dense matrix over F_p, destroying it.
bool full_column_rank(std::vector<int>& a, int rows, int cols, int p, const std::vector<int>& inv) {
  int rank = 0;
  for (int c = 0; c < cols; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + c]) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != rank)
      for (int j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const int s = inv[a[rank * cols + c]];
    for (int j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * s % p;
    for (int r = rank + 1; r < rows; ++r) {
      const int m = a[r * cols + c];
      if (!m) continue;
      for (int j = c; j < cols; ++j) a[r * cols + j] = (a[r * cols + j] + (p - m) * a[rank * cols + j]) % p;
    }
    ++rank;
  }
  return true;
}

bool full_column_rank_f2(std::vector<std::uint64_t>& rows, int cols) {
  const int n = static_cast<int>(rows.size());
  int rank = 0;
  for (int c = 0; c < cols; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (rows[r] & bit) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(rows[piv], rows[rank]);
    for (int r = rank + 1; r < n; ++r)
      if (rows[r] & bit) rows[r] ^= rows[rank];
    ++rank;
  }
  return true;
}

}  // namespace

std::vector<boost::dynamic_bitset<>> full_rank_sweep(const Fp& f, int k, const std::vector<LinearFamily>& blocks, Exec exec) {
  const int p = f.p();
  long long count = 1;
  for (int j = 0; j < k; ++j) count *= p;
  const size_t nx = blocks.size();
  std::vector<int> inv(p, 0);
  for (int a = 1; a < p; ++a) inv[a] = f.inv(static_cast<Elem>(a));
  // Packed coefficient matrices: per family, per j, either bit rows (p = 2) or ints.
  const bool packed = p == 2 && std::all_of(blocks.begin(), blocks.end(), [](const LinearFamily& b) { return b.cols <= 64; });
  std::vector<std::vector<std::vector<std::uint64_t>>> bits(nx);
  std::vector<std::vector<std::vector<int>>> ints(nx);
  for (size_t x = 0; x < nx; ++x) {
    const auto& fam = blocks[x];
    for (int j = 0; j < k; ++j) {
      const Matrix& w = fam.w[j];
      if (packed) {
        std::vector<std::uint64_t> rows(fam.rows, 0);
        for (int r = 0; r < fam.rows; ++r)
          for (int c = 0; c < fam.cols; ++c)
            if (w(r, c)) rows[r] |= std::uint64_t{1} << c;
        bits[x].push_back(std::move(rows));
      } else {
        std::vector<int> v(w.data().begin(), w.data().end());
        ints[x].push_back(std::move(v));
      }
    }
  }
  std::vector<boost::dynamic_bitset<>> out(count, boost::dynamic_bitset<>(nx));
  auto one = [&](long long idx, std::vector<int>& c, std::vector<int>& buf, std::vector<std::uint64_t>& rows) {
    long long r = idx;
    for (int j = 0; j < k; ++j) {
      c[j] = static_cast<int>(r % p);
      r /= p;
    }
    for (size_t x = 0; x < nx; ++x) {
      const auto& fam = blocks[x];
      if (fam.cols == 0) {
        out[idx][x] = true;
        continue;
      }
      if (fam.rows < fam.cols) continue;
      if (packed) {
        rows.assign(fam.rows, 0);
        for (int j = 0; j < k; ++j)
          if (c[j])
            for (int q = 0; q < fam.rows; ++q) rows[q] ^= bits[x][j][q];
        out[idx][x] = full_column_rank_f2(rows, fam.cols);
      } else {
        buf.assign(static_cast<size_t>(fam.rows) * fam.cols, 0);
        for (int j = 0; j < k; ++j)
          if (c[j])
            for (size_t q = 0; q < buf.size(); ++q) buf[q] = (buf[q] + c[j] * ints[x][j][q]) % p;
        out[idx][x] = full_column_rank(buf, fam.rows, fam.cols, p, inv);
      }
    }
  };
  if (exec == Exec::Serial) {
    std::vector<int> c(k), buf;
    std::vector<std::uint64_t> rows;
    for (long long idx = 0; idx < count; ++idx) one(idx, c, buf, rows);
  } else {
#pragma omp parallel
    {
      std::vector<int> c(k), buf;
      std::vector<std::uint64_t> rows;
#pragma omp for schedule(dynamic, 256)
      for (long long idx = 0; idx < count; ++idx) one(idx, c, buf, rows);
    }
  }
  return out;
}

std::vector<boost::dynamic_bitset<>> full_rank_sweep_reference(const Fp& f, int k, const std::vector<LinearFamily>& blocks) {
  long long count = 1;
  for (int j = 0; j < k; ++j) count *= f.p();
  const size_t nx = blocks.size();
  std::vector<boost::dynamic_bitset<>> out(count, boost::dynamic_bitset<>(nx));
  auto one = [&](long long idx) {
    std::vector<Elem> c(k);
    long long r = idx;
    for (int j = 0; j < k; ++j) {
      c[j] = static_cast<Elem>(r % f.p());
      r /= f.p();
    }
    for (size_t x = 0; x < nx; ++x) {
      const auto& fam = blocks[x];
      if (fam.cols == 0) {
        out[idx][x] = true;
        continue;
      }
      Matrix m(fam.rows, fam.cols);
      for (int j = 0; j < k; ++j)
        if (c[j]) m = linalg::add(f, m, linalg::scale(f, fam.w[j], c[j]));
      out[idx][x] = linalg::rank(f, m) == m.cols();
    }
  };
  for (long long idx = 0; idx < count; ++idx) one(idx);
  return out;
}

}  // namespace torslab
