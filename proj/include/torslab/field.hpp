#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torslab {

using Elem = std::uint8_t;

/// Prime field F_p, 2 <= p <= 13. Elements are stored reduced in [0, p).
class Fp {
 public:
  explicit Fp(int p = 2);

  int p() const { return p_; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((a + b) % p_); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((a + p_ - b) % p_); }
  Elem neg(Elem a) const { return static_cast<Elem>((p_ - a) % p_); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((a * b) % p_); }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const;

  bool operator==(const Fp& o) const { return p_ == o.p_; }

 private:
  int p_;
  std::vector<Elem> inv_;
};

bool is_prime(int p);

/// Dense row-major matrix over F_p. Entries are always reduced.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Elem operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;
  auto operator<=>(const Matrix& o) const = default;

  Matrix transpose() const;
  std::vector<Elem> row(int r) const;
  Matrix submatrix(int r0, int c0, int nr, int nc) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

namespace linalg {

Matrix multiply(const Fp& f, const Matrix& a, const Matrix& b);
Matrix add(const Fp& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Fp& f, const Matrix& a, const Matrix& b);
Matrix scale(const Fp& f, const Matrix& a, Elem s);
std::vector<Elem> apply(const Fp& f, const Matrix& a, const std::vector<Elem>& v);

struct Echelon {
  Matrix reduced;           // fully reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form. Pivots are searched left to right.
Echelon rref(const Fp& f, Matrix m);
int rank(const Fp& f, const Matrix& m);

/// Basis of {x : m x = 0}, one basis vector per row of the result.
Matrix nullspace(const Fp& f, const Matrix& m);

std::optional<Matrix> inverse(const Fp& f, const Matrix& m);
bool is_invertible(const Fp& f, const Matrix& m);

/// Stack rows of b under a (column counts must agree; empty matrices are skipped).
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

/// Row space membership: is v in the row span of the echelon form e?
bool in_row_space(const Fp& f, const Echelon& e, const std::vector<Elem>& v);
/// Reduce v against an echelon basis, returning the remainder.
std::vector<Elem> reduce(const Fp& f, const Echelon& e, std::vector<Elem> v);

}  // namespace linalg

std::string to_string(const Matrix& m);

}  // namespace torslab
