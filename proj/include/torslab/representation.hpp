#pragma once

#include <string>
#include <vector>

#include "torslab/algebra.hpp"
#include "torslab/field.hpp"

namespace torslab {

/// Class of a module in K_0(mod A), coordinates in the basis of simples.
using DimVector = std::vector<int>;

/// A module given by per-vertex dimensions and one dims[t] x dims[s] matrix per arrow.
struct Representation {
  DimVector dims;
  std::vector<Matrix> maps;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Representation& o) const = default;
};

/// A morphism of representations: one dims_N[v] x dims_M[v] matrix per vertex.
using Morphism = std::vector<Matrix>;

/// Per-vertex subspaces, each given by a fully reduced echelon basis (rows).
struct Subspaces {
  std::vector<Matrix> basis;

  DimVector dims() const;
};

Representation zero_module(const Algebra& alg);
Representation simple_module(const Algebra& alg, int vertex);
/// P(i) = e_i A on the basis of paths starting at i, grouped by target.
Representation projective_module(const Algebra& alg, int vertex);
/// I(i) = D(A e_i) on the dual basis of paths ending at i, grouped by source.
Representation injective_module(const Algebra& alg, int vertex);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& parts, const Algebra& alg);

/// Throws std::invalid_argument if the shapes do not fit the quiver.
void check_shape(const Algebra& alg, const Representation& m);
bool satisfies_relations(const Algebra& alg, const Representation& m);

/// Action of a path (arrows left to right) as a dims[target] x dims[source] matrix.
Matrix path_action(const Algebra& alg, const Representation& m, const Path& path);

/// Basis of Hom_A(M, N): solutions of phi_t M_a = N_a phi_s for every arrow.
std::vector<Morphism> hom_space(const Algebra& alg, const Representation& m, const Representation& n);
int hom_dim(const Algebra& alg, const Representation& m, const Representation& n);

Morphism compose(const Fp& f, const Morphism& g, const Morphism& h);  // g o h
Morphism combine(const Fp& f, const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs, const DimVector& src,
                 const DimVector& tgt);
bool is_isomorphism(const Fp& f, const Morphism& phi);
bool is_zero(const Morphism& phi);

bool is_submodule(const Algebra& alg, const Representation& m, const Subspaces& s);
Representation submodule(const Algebra& alg, const Representation& m, const Subspaces& s);
/// Induced representation on M/S. Throws std::invalid_argument if S is not arrow-stable.
Representation quotient_module(const Algebra& alg, const Representation& m, const Subspaces& s);

Subspaces zero_subspaces(const DimVector& dims);
Subspaces full_subspaces(const DimVector& dims);
Subspaces kernel(const Fp& f, const Morphism& phi, const DimVector& src);
Subspaces image(const Fp& f, const Morphism& phi, const DimVector& tgt);
Subspaces sum(const Fp& f, const Subspaces& a, const Subspaces& b);
Subspaces intersection(const Fp& f, const Subspaces& a, const Subspaces& b, const DimVector& dims);
/// Smallest submodule containing the given per-vertex vector sets.
Subspaces generated_submodule(const Algebra& alg, const Representation& m, const std::vector<Matrix>& generators);

/// Apply an invertible change of basis g_v at each vertex: maps become g_t M_a g_s^{-1}.
Representation change_basis(const Algebra& alg, const Representation& m, const std::vector<Matrix>& g);

DimVector dim_vector(const Representation& m);
DimVector add(const DimVector& a, const DimVector& b);
DimVector subtract(const DimVector& a, const DimVector& b);
bool leq(const DimVector& a, const DimVector& b);
std::string to_string(const DimVector& d);

/// dim_K End_A(S(i)) for each vertex; the rescaling constants of the Euler form.
std::vector<int> simple_endomorphism_dims(const Algebra& alg);

}  // namespace torslab
