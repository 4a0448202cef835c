#pragma once

#include <memory>
#include <random>
#include <string>

#include "torslab/catalogue.hpp"
#include "torslab/torsion.hpp"

namespace support {

inline std::string data(const std::string& name) { return std::string(TORSLAB_DATA) + "/" + name + ".alg"; }

inline std::shared_ptr<const torslab::Algebra> load(const std::string& name, int p = 0) {
  return std::make_shared<const torslab::Algebra>(torslab::load_algebra_file(data(name), p));
}

inline int index_of(const torslab::Catalogue& cat, const torslab::Representation& m) {
  auto i = cat.find(m);
  if (!i) throw std::runtime_error("module not in catalogue");
  return *i;
}

/// Kronecker (1,1)-module with arrow scalars (a, b).
inline torslab::Representation kron11(int a, int b) {
  torslab::Representation m;
  m.dims = {1, 1};
  torslab::Matrix ma(1, 1), mb(1, 1);
  ma(0, 0) = static_cast<torslab::Elem>(a);
  mb(0, 0) = static_cast<torslab::Elem>(b);
  m.maps = {ma, mb};
  return m;
}

/// p^dim Hom(M, N) counted by sweeping every tuple of vertex matrices.
inline long long hom_count_bruteforce(const torslab::Algebra& alg, const torslab::Representation& x,
                                      const torslab::Representation& y) {
  using namespace torslab;
  const Fp& f = alg.field();
  int entries = 0;
  for (size_t v = 0; v < x.dims.size(); ++v) entries += x.dims[v] * y.dims[v];
  long long total = 1;
  for (int i = 0; i < entries; ++i) total *= f.p();
  long long count = 0;
  for (long long idx = 0; idx < total; ++idx) {
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
      ok = linalg::multiply(f, phi[arr.target], x.maps[a]) == linalg::multiply(f, y.maps[a], phi[arr.source]);
    }
    if (ok) ++count;
  }
  return count;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace support
