#pragma once

#include <optional>
#include <vector>

#include "torslab/rational.hpp"
#include "torslab/torsion.hpp"

namespace torslab {

using IntVector = std::vector<long long>;

/// Nonnegative span of finitely many vectors in the simple basis of K_0(mod A).
/// Generators are stored as primitive integer vectors, deduplicated up to positive scaling and sorted.
struct RationalCone {
  int dim = 0;
  std::vector<IntVector> generators;

  static RationalCone from_integer(int n, const std::vector<IntVector>& gens);
  static RationalCone from_rational(int n, const std::vector<std::vector<Rational>>& gens);
  bool is_zero() const { return generators.empty(); }
  RationalCone negated() const;
  bool operator==(const RationalCone& o) const { return dim == o.dim && generators == o.generators; }
};

/// Primitive integer vector on the ray of v; zero stays zero.
IntVector primitive(const std::vector<Rational>& v);

RationalCone cone_of_subcat(const Catalogue& cat, const SubcatSet& s);
/// {x - y : x in t, y in f}.
RationalCone difference_cone(const RationalCone& t, const RationalCone& f);

struct IntersectionResult {
  bool trivial = true;
  std::vector<Rational> common;  // a nonzero common vector when !trivial, empty otherwise
};

IntersectionResult intersect_trivially(const RationalCone& a, const RationalCone& b);
bool is_strongly_convex(const RationalCone& c);

/// theta in the projective basis with theta > 0 on the generators of t and theta < 0 on those of f.
/// end_dims are the constants c_i of the Euler pairing (empty means all 1).
std::optional<StabilityVector> separating_functional(const RationalCone& t, const RationalCone& f,
                                                     const std::vector<int>& end_dims = {});

/// Open cones spanned by the given rays share a point.
bool open_cones_intersect(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

struct NumDisResult {
  bool disjoint = true;
  std::optional<StabilityVector> separator;  // present when disjoint
  std::vector<Rational> common;              // nonzero common class when not disjoint
};

NumDisResult numerically_disjoint(const Catalogue& cat, const SubcatSet& t, const SubcatSet& f);

/// Independent check: a nonzero dimension vector that is a sum of members of t and also a sum of
/// members of f, searched over sums of total dimension at most max_total.
std::optional<DimVector> common_class_bruteforce(const Catalogue& cat, const SubcatSet& t, const SubcatSet& f,
                                                 int max_total = 12);

}  // namespace torslab
