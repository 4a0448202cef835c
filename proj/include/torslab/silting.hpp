#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "torslab/complex.hpp"
#include "torslab/rational.hpp"
#include "torslab/torsion.hpp"

namespace torslab {

struct MutationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A basic 2-term silting complex as its list of indecomposable summands, sorted by g-vector.
struct SiltingComplex {
  std::vector<TwoTermComplex> summands;
  std::vector<IntVector> g_vectors;  // parallel to summands

  static SiltingComplex from_summands(int n, std::vector<TwoTermComplex> summands);
  /// The g-matrix: sorted g-vectors, the vertex key.
  const std::vector<IntVector>& key() const { return g_vectors; }
  TwoTermComplex total(const Algebra& alg) const { return direct_sum(alg, summands); }
};

SiltingComplex initial_silting(const Algebra& alg);  // A
SiltingComplex shifted_silting(const Algebra& alg);  // A[1]

/// Replace summand k through the exchange triangle of a minimal approximation by the other summands.
/// Left mutation is tried first; when its cone is not 2-term the right mutation is used.
SiltingComplex mutate(const Algebra& alg, const SiltingComplex& t, int k);

struct MutationEdge {
  int from = 0, to = 0, summand = 0;
  bool operator<(const MutationEdge& o) const {
    return std::tie(from, to, summand) < std::tie(o.from, o.to, o.summand);
  }
};

struct MutationGraph {
  std::vector<SiltingComplex> vertices;  // ordered by g-matrix
  std::vector<MutationEdge> edges;       // every computed mutation, sorted
  bool complete = false;                 // no vertex has an unexplored neighbour
  int depth = 0;
};

/// Breadth-first mutation from A, up to `depth` mutations away.
MutationGraph enumerate_silting(const Algebra& alg, int depth);

struct SiltingCone {
  std::vector<IntVector> rays;
  bool open = true;  // C-circle when true, closure otherwise
};

SiltingCone silting_cone(const SiltingComplex& t, bool open = true);

/// Coefficients of theta in the basis of rays, or nullopt when the rays are dependent.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<IntVector>& rays, const StabilityVector& theta);

/// theta in the open cone (strictly positive combination of rays).
bool in_open_cone(const std::vector<IntVector>& rays, const StabilityVector& theta);

struct RigidityVerdict {
  enum class Status { Rigid, NotRigid, Unknown };
  Status status = Status::Unknown;
  std::vector<TwoTermComplex> witness;  // indecomposable summands of U with theta in its open cone
  std::vector<IntVector> witness_rays;
  int vertex = -1;                        // graph vertex containing U as a summand
  int depth = 0;
};

std::string to_string(RigidityVerdict::Status s);

RigidityVerdict rigidity(const StabilityVector& theta, const MutationGraph& graph);

struct InducedPairs {
  SubcatSet tbar, t;  // left perpendicular of H^{-1}(nu U), Fac H^0(U)
};

InducedPairs induced_torsion_pairs(const Algebra& alg, const TorsionCalculus& calc, const TwoTermComplex& u);

/// Pairs of distinct vertices whose open cones meet; empty for a fan.
std::vector<std::pair<int, int>> overlapping_chambers(const MutationGraph& graph);

/// g-vectors of all indecomposable presilting complexes with each multiplicity at most max_mult,
/// by exhaustive search over all maps P^{-1} -> P^0 with disjoint supports.
std::set<IntVector> exhaustive_presilting_gvectors(const Algebra& alg, int max_mult);

}  // namespace torslab
