#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torslab/algebra.hpp"
#include "torslab/representation.hpp"

namespace torslab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search over a Hom space would exceed p^dim > 10^6.
struct IsoOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kExhaustiveCap = 1000000;

/// Isomorphism invariant used to bucket modules before the exact test.
using ModuleKey = std::vector<int>;

ModuleKey module_key(const Algebra& alg, const Representation& m, const std::vector<Representation>& probes);

bool is_isomorphic(const Algebra& alg, const Representation& m, const Representation& n);
bool is_brick(const Algebra& alg, const Representation& m);

/// Every submodule of M, as echelon-form subspaces, in a deterministic order.
std::vector<Subspaces> enumerate_submodules(const Algebra& alg, const Representation& m);
std::vector<DimVector> submodule_dimvectors(const Algebra& alg, const Representation& m);
std::vector<DimVector> quotient_dimvectors(const Algebra& alg, const Representation& m);

struct ExtensionResult {
  std::vector<Representation> middle;  // 0 -> Y -> E -> X -> 0, one per iso-class
  bool truncated = false;              // middle terms left the bound and were not materialized
  int dropped = 0;
};

/// Middle terms of extensions of X by Y. With a bound, middle terms whose
/// dimension vector exceeds it are counted in `dropped` instead of returned.
ExtensionResult extensions(const Algebra& alg, const Representation& x, const Representation& y,
                           const DimVector* bound = nullptr);

/// Representatives of Ext^1(X, Y) up to scalars (zero first), as middle terms without dedup.
std::vector<Representation> extension_middles(const Algebra& alg, const Representation& x, const Representation& y);

struct BrickRecord {
  int index = 0;
  int end_dim = 0;
};

struct Semibrick {
  std::vector<int> members;  // catalogue indices, increasing
  bool maximal = false;      // relative to the catalogue's brick list
};

class Catalogue {
 public:
  static constexpr int kDefaultBudget = 22;

  static Catalogue enumerate(std::shared_ptr<const Algebra> alg, DimVector bound, int budget = kDefaultBudget);

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  const DimVector& bound() const { return bound_; }
  int size() const { return static_cast<int>(items_.size()); }

  const Representation& item(int i) const { return items_[i]; }
  const std::vector<Representation>& items() const { return items_; }
  const DimVector& dims(int i) const { return items_[i].dims; }
  int total_dim(int i) const { return items_[i].total_dim(); }
  const std::string& fingerprint(int i) const { return fingerprints_[i]; }
  const ModuleKey& key(int i) const { return keys_[i]; }
  int end_dim(int i) const { return end_dims_[i]; }
  bool brick(int i) const { return bricks_[i]; }

  /// Catalogue index of the iso-class of M, or nullopt when M lies outside the bound.
  std::optional<int> find(const Representation& m) const;

  const std::vector<DimVector>& submodule_dims(int i) const { return subdims_[i]; }
  std::vector<DimVector> quotient_dims(int i) const;

  /// Indices ordered by total dimension, then index; the witness-search order.
  const std::vector<int>& search_order() const { return order_; }

  /// Pairs (sub class, quotient class) over all nonzero proper submodules of item i.
  const std::vector<std::pair<int, int>>& filtration_pairs(int i) const;

  const std::vector<Representation>& probes() const { return probes_; }
  /// dim End(S(i)) per vertex, the Euler-form rescaling constants.
  const std::vector<int>& simple_end_dims() const { return simple_ends_; }

 private:
  std::shared_ptr<const Algebra> alg_;
  DimVector bound_;
  std::vector<Representation> items_;
  std::vector<ModuleKey> keys_;
  std::vector<std::string> fingerprints_;
  std::vector<int> end_dims_;
  std::vector<char> bricks_;
  std::vector<std::vector<DimVector>> subdims_;
  std::vector<int> order_;
  std::vector<Representation> probes_;
  std::vector<int> simple_ends_;
  mutable std::vector<std::optional<std::vector<std::pair<int, int>>>> filtrations_;
};

/// Independent enumeration: sweep all matrix tuples with dims <= bound, dedup by is_isomorphic.
std::vector<Representation> enumerate_modules_bruteforce(const Algebra& alg, const DimVector& bound);

std::vector<BrickRecord> enumerate_bricks(const Catalogue& cat);
bool is_semibrick(const Catalogue& cat, const std::vector<int>& members);
/// All semibricks with at most max_size members (the empty one first), DFS order over brick indices.
std::vector<Semibrick> enumerate_semibricks(const Catalogue& cat, int max_size = 8);

/// Every dims <= bound, in lexicographic order.
std::vector<DimVector> dims_below(const DimVector& bound);

}  // namespace torslab
