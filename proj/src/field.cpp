#include "torslab/field.hpp"

#include <sstream>

namespace torslab {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp::Fp(int p) : p_(p) {
  if (!is_prime(p) || p > 13) throw std::invalid_argument("field characteristic must be a prime <= 13, got " + std::to_string(p));
  inv_.assign(p, 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) inv_[a] = static_cast<Elem>(b);
}

Elem Fp::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return inv_[a];
}

Elem Fp::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (e) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Elem> Matrix::row(int r) const {
  return std::vector<Elem>(data_.begin() + static_cast<long>(r) * cols_, data_.begin() + static_cast<long>(r + 1) * cols_);
}

Matrix Matrix::submatrix(int r0, int c0, int nr, int nc) const {
  Matrix s(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
  return s;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) os << ";";
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << int(m(r, c));
  }
  os << "]";
  return os.str();
}

namespace linalg {

Matrix multiply(const Fp& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  const int p = f.p();
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const int aik = a(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Elem>((c(i, j) + aik * b(k, j)) % p);
    }
  }
  return c;
}

Matrix add(const Fp& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch in add");
  Matrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.add(a.data()[i], b.data()[i]);
  return c;
}

Matrix subtract(const Fp& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch in subtract");
  Matrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return c;
}

Matrix scale(const Fp& f, const Matrix& a, Elem s) {
  Matrix c = a;
  for (auto& e : c.data()) e = f.mul(e, s);
  return c;
}

std::vector<Elem> apply(const Fp& f, const Matrix& a, const std::vector<Elem>& v) {
  std::vector<Elem> out(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    int acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = static_cast<Elem>(acc % f.p());
  }
  return out;
}

Echelon rref(const Fp& f, Matrix m) {
  const int rows = m.rows(), cols = m.cols(), p = f.p();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Elem s = f.inv(m(r, c));
    for (int j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m(i, c)) continue;
      const int factor = p - m(i, c);
      for (int j = c; j < cols; ++j)
        if (m(r, j)) m(i, j) = static_cast<Elem>((m(i, j) + factor * m(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.submatrix(0, 0, r, cols), std::move(pivots)};
}

int rank(const Fp& f, const Matrix& m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(f, m).pivots.size());
}

Matrix nullspace(const Fp& f, const Matrix& m) {
  const int n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  Echelon e = rref(f, m);
  std::vector<char> is_pivot(n, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(static_cast<int>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis(static_cast<int>(k), fc) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) basis(static_cast<int>(k), e.pivots[r]) = f.neg(e.reduced(static_cast<int>(r), fc));
  }
  return basis;
}

std::optional<Matrix> inverse(const Fp& f, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Echelon e = rref(f, hstack(m, Matrix::identity(n)));
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.submatrix(0, n, n, n);
}

bool is_invertible(const Fp& f, const Matrix& m) {
  return m.rows() == m.cols() && rank(f, m) == m.rows();
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix s(a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), s.data().begin());
  std::copy(b.data().begin(), b.data().end(), s.data().begin() + static_cast<long>(a.data().size()));
  return s;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix s(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) s(r, a.cols() + c) = b(r, c);
  }
  return s;
}

std::vector<Elem> reduce(const Fp& f, const Echelon& e, std::vector<Elem> v) {
  const int p = f.p();
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    const int c = e.pivots[r];
    if (!v[c]) continue;
    const int factor = p - v[c];
    for (int j = 0; j < e.reduced.cols(); ++j)
      if (e.reduced(static_cast<int>(r), j)) v[j] = static_cast<Elem>((v[j] + factor * e.reduced(static_cast<int>(r), j)) % p);
  }
  return v;
}

bool in_row_space(const Fp& f, const Echelon& e, const std::vector<Elem>& v) {
  for (Elem x : reduce(f, e, v))
    if (x) return false;
  return true;
}

}  // namespace linalg
}  // namespace torslab
