#pragma once

#include <optional>
#include <vector>

#include "torslab/cone.hpp"
#include "torslab/kernels.hpp"
#include "torslab/torsion.hpp"

namespace torslab {

/// The pairs (Tbar_theta, F_theta) and (T_theta, Fbar_theta) restricted to a catalogue window.
struct SemistableQuadruple {
  StabilityVector theta;
  SubcatSet T, Tbar, F, Fbar;
};

bool membership(const StabilityVector& theta, const Catalogue& cat, int index, Which which);
bool membership(const StabilityVector& theta, const Algebra& alg, const Representation& m, Which which);

SemistableQuadruple semistable_quadruple(const StabilityVector& theta, const Catalogue& cat, Exec exec = Exec::Parallel);
/// Quadruples for many theta at once, one membership sweep per class.
std::vector<SemistableQuadruple> semistable_quadruples(const std::vector<StabilityVector>& thetas, const Catalogue& cat,
                                                       Exec exec = Exec::Parallel);

bool tf_equivalent(const StabilityVector& theta, const StabilityVector& eta, const Catalogue& cat);

/// theta - eta has every coordinate strictly positive.
bool cw_less(const StabilityVector& eta, const StabilityVector& theta);

/// For item index in T_theta: a radius eps > 0 such that every eta with max-norm |eta - theta| < eps
/// keeps the item in T_eta. nullopt when the item is not in T_theta.
std::optional<Rational> openness_radius(const StabilityVector& theta, const Catalogue& cat, int index);

/// The theta-semistable modules of the window: Tbar_theta intersected with the right perpendicular of T_theta.
SubcatSet semistable_subcategory(const SemistableQuadruple& q, const TorsionCalculus& calc);

}  // namespace torslab
