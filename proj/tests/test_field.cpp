#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "torslab/field.hpp"

using namespace torslab;

namespace {

Matrix random_matrix(std::mt19937& rng, int r, int c, int p) {
  Matrix m(r, c);
  for (auto& e : m.data()) e = static_cast<Elem>(rng() % p);
  return m;
}

// Size of the row span by enumerating every combination of rows.
long long span_size(const Fp& f, const Matrix& m) {
  std::set<std::vector<Elem>> seen;
  long long combos = 1;
  for (int i = 0; i < m.rows(); ++i) combos *= f.p();
  for (long long idx = 0; idx < combos; ++idx) {
    std::vector<Elem> v(m.cols(), 0);
    long long t = idx;
    for (int i = 0; i < m.rows(); ++i) {
      const Elem c = static_cast<Elem>(t % f.p());
      t /= f.p();
      for (int j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(c, m(i, j)));
    }
    seen.insert(v);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    Fp f(p);
    for (int a = 1; a < p; ++a) CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
    CHECK(f.from_int(-1) == p - 1);
    CHECK(f.from_int(p * 3 + 1) == 1);
  }
  CHECK_THROWS(Fp(4));
  CHECK_THROWS(Fp(17));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("rank agrees with the size of the row span") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    Fp f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, p);
      long long expect = 1;
      for (int i = 0; i < linalg::rank(f, m); ++i) expect *= p;
      CHECK(span_size(f, m) == expect);
    }
  }
}

TEST_CASE("nullspace, inverse and rref") {
  std::mt19937 rng(11);
  for (int p : {2, 3, 7}) {
    Fp f(p);
    for (int trial = 0; trial < 50; ++trial) {
      const int r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix m = random_matrix(rng, r, c, p);
      const Matrix n = linalg::nullspace(f, m);
      CHECK(n.rows() + linalg::rank(f, m) == c);
      if (n.rows()) CHECK(linalg::multiply(f, m, n.transpose()).is_zero());
      const auto e = linalg::rref(f, m);
      CHECK(static_cast<int>(e.pivots.size()) == linalg::rank(f, m));
      for (int i = 0; i < r; ++i) CHECK(linalg::in_row_space(f, e, m.row(i)));
      const Matrix sq = random_matrix(rng, r, r, p);
      const auto inv = linalg::inverse(f, sq);
      CHECK(inv.has_value() == (linalg::rank(f, sq) == r));
      if (inv) CHECK(linalg::multiply(f, sq, *inv) == Matrix::identity(r));
    }
  }
}

TEST_CASE("stacking and empty shapes") {
  Fp f(3);
  Matrix a(1, 2), b(2, 2);
  a(0, 1) = 1;
  b(1, 0) = 2;
  const Matrix s = linalg::vstack(a, b);
  CHECK(s.rows() == 3);
  CHECK(s(2, 0) == 2);
  CHECK(linalg::hstack(a, Matrix(1, 0)).cols() == 2);
  CHECK(linalg::rank(f, Matrix(0, 3)) == 0);
  CHECK(linalg::nullspace(f, Matrix(0, 3)).rows() == 3);
}
