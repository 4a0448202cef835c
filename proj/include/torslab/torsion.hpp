#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "torslab/catalogue.hpp"
#include "torslab/kernels.hpp"

namespace torslab {

enum class SubcatKind { None, Torsion, Torsionfree };

/// A subcategory of the catalogue window: membership bits over catalogue indices.
struct SubcatSet {
  boost::dynamic_bitset<> members;
  bool truncated = false;
  SubcatKind kind = SubcatKind::None;

  bool contains(int i) const { return members.test(i); }
  int count() const { return static_cast<int>(members.count()); }
  std::vector<int> indices() const;
  bool subset_of(const SubcatSet& o) const { return members.is_subset_of(o.members); }
  bool operator==(const SubcatSet& o) const { return members == o.members; }
};

struct TorsionPair {
  SubcatSet t;
  SubcatSet f;
};

/// left_perp(right_perp(T)) != T: the window cannot represent the pair faithfully.
struct ReflexivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fac/Sub/Filt closures, perpendicular categories and the compactness predicates,
/// all relative to one catalogue. Tables are computed once at construction.
class TorsionCalculus {
 public:
  explicit TorsionCalculus(const Catalogue& cat, Exec exec = Exec::Parallel);

  const Catalogue& catalogue() const { return *cat_; }
  int size() const { return n_; }
  int hom(int i, int j) const { return hom_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<int>& hom_table() const { return hom_; }
  const TraceTables& traces() const { return traces_; }

  SubcatSet zero() const;
  SubcatSet whole() const;
  /// The given indices plus the zero module.
  SubcatSet make(const std::vector<int>& indices) const;

  SubcatSet fac_closure(const SubcatSet& gens) const;
  SubcatSet sub_closure(const SubcatSet& gens) const;
  SubcatSet filt_closure(const SubcatSet& c) const;
  /// Same fixed point computed by splicing extensions of members; the cross-check route.
  SubcatSet filt_closure_by_extensions(const SubcatSet& c) const;
  SubcatSet t_of(const SubcatSet& gens) const;
  SubcatSet f_of(const SubcatSet& gens) const;
  SubcatSet left_perp(const SubcatSet& c) const;
  SubcatSet right_perp(const SubcatSet& c) const;

  /// Closures generated by a module that need not lie in the window.
  SubcatSet fac_of_module(const Representation& m) const;
  SubcatSet sub_of_module(const Representation& m) const;
  SubcatSet left_perp_of_module(const Representation& m) const;
  SubcatSet right_perp_of_module(const Representation& m) const;

  bool is_torsion_class(const SubcatSet& s) const;
  bool is_torsionfree_class(const SubcatSet& s) const;

  TorsionPair torsion_pair_of(const SubcatSet& t) const;

  /// t_of(S) over all semibricks S (size <= max_semibrick), plus {0}; deduplicated and sorted.
  std::vector<SubcatSet> enumerate_torsion_classes(int max_semibrick = 8) const;
  const std::vector<Semibrick>& semibricks() const;

  // Witness searches in the window, by total dimension then index.
  std::optional<int> compact_witness(const SubcatSet& t) const;
  std::optional<int> cocompact_witness(const SubcatSet& t) const;
  bool is_bicompact(const SubcatSet& t) const { return compact_witness(t) && cocompact_witness(t); }
  std::optional<int> fac_single_witness(const SubcatSet& t) const;
  std::optional<int> sub_single_witness(const SubcatSet& f) const;
  bool is_functorially_finite(const SubcatSet& t) const { return fac_single_witness(t).has_value(); }
  std::optional<Semibrick> widely_generated(const SubcatSet& t) const;

 private:
  const Catalogue* cat_;
  int n_;
  std::vector<int> hom_;
  TraceTables traces_;
  std::vector<boost::dynamic_bitset<>> hom_nonzero_;     // row i: j with Hom(i, j) != 0
  std::vector<boost::dynamic_bitset<>> hom_nonzero_in_;  // row j: i with Hom(i, j) != 0
  std::vector<SubcatSet> t_single_, f_single_, fac_single_, sub_single_;
  mutable std::optional<std::vector<Semibrick>> semibricks_;
};

/// Hasse edges (i, j) with classes[i] covered by classes[j] under inclusion.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<SubcatSet>& classes);

/// Restrict a set on a larger catalogue to the items of a smaller one (matched by isomorphism).
SubcatSet restrict_to(const Catalogue& big, const SubcatSet& s, const Catalogue& small);

}  // namespace torslab
