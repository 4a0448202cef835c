#include "torslab/lp.hpp"

#include <stdexcept>

namespace torslab {

namespace {

struct Tableau {
  std::vector<std::vector<BigRational>> rows;  // each row: coefficients then rhs
  std::vector<BigRational> obj;                // reduced costs (maximize), rhs slot unused
  std::vector<int> basis;

  int cols() const { return static_cast<int>(obj.size()) - 1; }

  void pivot(int r, int c) {
    const BigRational pv = rows[r][c];
    for (auto& v : rows[r]) v /= pv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const BigRational factor = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
    }
    if (obj[c] != 0) {
      const BigRational factor = obj[c];
      for (size_t j = 0; j < obj.size(); ++j)
        if (rows[r][j] != 0) obj[j] -= factor * rows[r][j];
    }
    basis[r] = c;
  }

  // Returns false if unbounded.
  bool run(int usable_cols) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < usable_cols; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      BigRational best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        BigRational ratio = rows[i].back() / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult solve_lp(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b, const std::vector<BigRational>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("solve_lp: ragged constraint matrix");
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // Phase 1 with artificial variables n .. n+m-1.
  Tableau t;
  t.rows.assign(m, std::vector<BigRational>(n + m + 1));
  t.obj.assign(n + m + 1, 0);
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.rows[i][j] = a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = b[i];
    t.basis[i] = n + i;
    for (int j = 0; j < n; ++j) t.obj[j] += a[i][j];
  }
  t.run(n + m);
  LPResult res;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= n && t.rows[i].back() != 0) {
      res.status = LPResult::Status::Infeasible;
      return res;
    }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (int i = 0; i < static_cast<int>(t.rows.size());) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  // Phase 2: reduced costs of the original objective.
  for (auto& row : t.rows) {
    row.erase(row.begin() + n, row.begin() + n + m);
  }
  t.obj.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) t.obj[j] = c[j];
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const BigRational cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= n; ++j) t.obj[j] -= cb * t.rows[i][j];
  }
  if (!t.run(n)) {
    res.status = LPResult::Status::Unbounded;
    return res;
  }
  res.status = LPResult::Status::Optimal;
  res.x.assign(n, 0);
  for (size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rows[i].back();
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

LPResult find_feasible(const std::vector<std::vector<BigRational>>& a, const std::vector<BigRational>& b) {
  const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  return solve_lp(a, b, std::vector<BigRational>(n, 0));
}

}  // namespace torslab
