#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "torslab/catalogue.hpp"
#include "torslab/rational.hpp"

namespace torslab {

/// Serial reference or OpenMP-parallel evaluation; results are identical.
enum class Exec { Serial, Parallel };

/// dim Hom(item i, item j) stored at [i * n + j].
std::vector<int> hom_dim_table(const Catalogue& cat, Exec exec = Exec::Parallel);

/// Trace and reject of each generator g in each item x, stored at [g * n + x].
struct TraceTables {
  int n = 0;
  std::vector<Subspaces> trace;   // sum of images of all maps g -> x
  std::vector<Subspaces> reject;  // intersection of kernels of all maps x -> g
  std::vector<char> fac;          // x is a quotient of a sum of copies of g
  std::vector<char> sub;          // x embeds in a sum of copies of g
};
TraceTables trace_tables(const Catalogue& cat, Exec exec = Exec::Parallel);

enum class Which { T, Tbar, F, Fbar };

/// Sign conditions on the finite sets of quotient / submodule dimension vectors.
bool membership(const StabilityVector& theta, const DimVector& dims, const std::vector<DimVector>& subdims,
                const std::vector<int>& end_dims, Which which);

/// Membership of every catalogue item for every theta, row-major [t * n + i].
std::vector<char> membership_sweep(const Catalogue& cat, const std::vector<StabilityVector>& thetas, Which which,
                                   Exec exec = Exec::Parallel);

/// Coefficient matrices of a linear family x -> sum_j c_j W_j, all of one shape.
struct LinearFamily {
  int rows = 0;
  int cols = 0;
  std::vector<Matrix> w;  // k matrices
};

/// For every coefficient vector c in F_p^k (index = base-p digits, least significant first)
/// bit x is set iff sum_j c_j W_xj has full column rank.
std::vector<boost::dynamic_bitset<>> full_rank_sweep(const Fp& f, int k, const std::vector<LinearFamily>& families,
                                                     Exec exec = Exec::Parallel);
/// Plain rank-per-matrix version of full_rank_sweep, kept as a cross-check.
std::vector<boost::dynamic_bitset<>> full_rank_sweep_reference(const Fp& f, int k, const std::vector<LinearFamily>& families);

}  // namespace torslab
