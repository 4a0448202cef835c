#pragma once

#include <optional>
#include <vector>

#include "torslab/complex.hpp"
#include "torslab/kernels.hpp"
#include "torslab/stability.hpp"
#include "torslab/torsion.hpp"

namespace torslab {

/// theta = [P0] - [P1] with P0 from the positive and P1 from the negative coordinates.
struct PresentationPair {
  StabilityVector theta;
  std::vector<int> p0, p1;  // vertex lists with multiplicity
};

PresentationPair presentation_pair(const StabilityVector& theta);

struct PresentationSpace {
  PresentationPair pair;
  std::vector<ProjMap> basis;  // F_p-basis of Hom(P1, P0), one path per element
};

PresentationSpace presentation_space(const Algebra& alg, const StabilityVector& theta);

/// sum_k coeffs[k] basis[k].
ProjMap presentation_map(const Algebra& alg, const PresentationSpace& space, const std::vector<Elem>& coeffs);

/// Left perpendicular of Ker(nu f) in the window.
SubcatSet tbar_of_map(const Algebra& alg, const TorsionCalculus& calc, const ProjMap& f);

/// Tbar_f for every f in the space (index = base-p digits of the coefficients, least significant
/// first), or nullopt when p^dim exceeds the exhaustive cap.
std::optional<std::vector<boost::dynamic_bitset<>>> tbar_sweep(const Algebra& alg, const Catalogue& cat,
                                                               const PresentationSpace& space, Exec exec = Exec::Parallel);

struct FeiLevel {
  int l = 0;
  int hom_dim = 0;
  bool swept = false;      // false when p^hom_dim exceeded the cap
  long long maps = 0;      // number of f enumerated
  int coverage = 0;        // |union up to this level|
  int violations = 0;      // items in some Tbar_f but outside Tbar_theta
};

struct FeiReport {
  StabilityVector theta;
  int l_max = 0;
  SubcatSet tbar;          // Tbar_theta in the window
  SubcatSet union_set;
  bool containment = true;
  bool equality = false;
  std::optional<int> equality_level;
  bool partial = false;    // some level was skipped
  std::vector<FeiLevel> levels;
};

FeiReport fei_union_check(const Algebra& alg, const TorsionCalculus& calc, const StabilityVector& theta, int l_max,
                          Exec exec = Exec::Parallel);

/// (left perpendicular of M, F(M)); throws ReflexivityError when they fail to form a torsion pair in the window.
TorsionPair cocompact_witness(const TorsionCalculus& calc, const Representation& m);

}  // namespace torslab
