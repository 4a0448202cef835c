#pragma once

#include <vector>

#include "torslab/algebra.hpp"
#include "torslab/cone.hpp"
#include "torslab/representation.hpp"

namespace torslab {

/// A map between sums of indecomposable projectives: sum_c P(src[c]) -> sum_r P(tgt[r]).
/// Entry (r, c) lies in e_tgt[r] A e_src[c] and acts by left multiplication.
struct ProjMap {
  std::vector<int> src, tgt;
  std::vector<AlgElem> entries;  // row-major, rows = tgt

  static ProjMap zero(const Algebra& alg, std::vector<int> src, std::vector<int> tgt);
  static ProjMap identity(const Algebra& alg, const std::vector<int>& vertices);
  int rows() const { return static_cast<int>(tgt.size()); }
  int cols() const { return static_cast<int>(src.size()); }
  AlgElem& at(int r, int c) { return entries[static_cast<size_t>(r) * src.size() + c]; }
  const AlgElem& at(int r, int c) const { return entries[static_cast<size_t>(r) * src.size() + c]; }
  bool is_zero() const;
  bool operator==(const ProjMap& o) const = default;
};

ProjMap compose(const Algebra& alg, const ProjMap& g, const ProjMap& f);  // g o f
ProjMap add(const Algebra& alg, const ProjMap& a, const ProjMap& b);
ProjMap negate(const Algebra& alg, const ProjMap& a);

/// Coordinates of Hom(sum P(src), sum P(tgt)) over the path bases, entry by entry.
int proj_hom_dim(const Algebra& alg, const std::vector<int>& src, const std::vector<int>& tgt);
std::vector<Elem> flatten(const Algebra& alg, const ProjMap& m);
ProjMap unflatten(const Algebra& alg, const std::vector<int>& src, const std::vector<int>& tgt, const std::vector<Elem>& v);

Representation projective_sum(const Algebra& alg, const std::vector<int>& vertices);
Representation injective_sum(const Algebra& alg, const std::vector<int>& vertices);
/// The module homomorphism given by a ProjMap.
Morphism module_map(const Algebra& alg, const ProjMap& m);
/// Its image under the Nakayama functor: sum I(src) -> sum I(tgt).
Morphism nakayama_map(const Algebra& alg, const ProjMap& m);

/// P^{-1} -> P^0 with P^{-1} = sum P(minus[c]) and P^0 = sum P(zero[r]); A sits in degree 0.
struct TwoTermComplex {
  std::vector<int> minus, zero;
  ProjMap d;

  static TwoTermComplex stalk0(const Algebra& alg, int vertex);  // P(i) in degree 0
  static TwoTermComplex stalk1(const Algebra& alg, int vertex);  // P(i) in degree -1
  /// [P^0] - [P^{-1}] in the basis of indecomposable projectives.
  IntVector g_vector(int n) const;
  bool empty() const { return minus.empty() && zero.empty(); }
  std::string to_string(const Algebra& alg) const;
};

TwoTermComplex direct_sum(const Algebra& alg, const std::vector<TwoTermComplex>& parts);

/// A bounded complex of projectives, terms[k] in degree lowest + k; diffs[k]: terms[k] -> terms[k+1].
struct ProjComplex {
  int lowest = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ProjMap> diffs;
};

/// Cancels every differential entry that is an isomorphism P(i) -> P(i); the result is homotopy
/// equivalent and has radical differentials.
ProjComplex reduce(const Algebra& alg, ProjComplex c);
TwoTermComplex reduce(const Algebra& alg, const TwoTermComplex& u);
bool is_reduced(const Algebra& alg, const TwoTermComplex& u);

struct ChainMap {
  ProjMap minus, zero;  // components in degrees -1 and 0
};

ChainMap compose(const Algebra& alg, const ChainMap& g, const ChainMap& f);

/// Hom in the homotopy category, as chain maps modulo null-homotopic maps.
struct HomK {
  Matrix cycles;                 // basis of chain maps (rows, chain coordinates)
  linalg::Echelon boundaries;    // null-homotopic maps
  std::vector<ChainMap> basis;   // chain maps projecting to a basis of the quotient
  int dim() const { return static_cast<int>(basis.size()); }
};

HomK hom_k(const Algebra& alg, const TwoTermComplex& x, const TwoTermComplex& y);
std::vector<Elem> chain_coords(const Algebra& alg, const ChainMap& f);

/// Hom(U, U[1]) = 0, i.e. (a, b) -> d a + b d is onto Hom(P^{-1}, P^0).
bool is_presilting(const Algebra& alg, const TwoTermComplex& u);

/// The endomorphism ring modulo its radical has no nontrivial idempotent (u reduced and nonzero).
bool is_indecomposable(const Algebra& alg, const TwoTermComplex& u);

struct Cohomology {
  Representation h0;          // cokernel of d
  Representation hminus1_nu;  // kernel of nu(d)
};

Cohomology cohomology(const Algebra& alg, const TwoTermComplex& u);

/// Kernel of nu(f) as a module, for f: sum P(src) -> sum P(tgt).
Representation nakayama_kernel(const Algebra& alg, const ProjMap& f);

}  // namespace torslab
