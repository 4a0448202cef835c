#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torslab/field.hpp"

namespace torslab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when path-basis saturation exceeds its cap, i.e. the ideal is
/// probably not admissible and the algebra is not finite dimensional.
struct NonAdmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

/// A path of the quiver, arrows composed left to right (a.b = a then b).
/// Trivial paths have no arrows and source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
};

struct RelationTerm {
  Elem coeff = 1;
  std::vector<int> arrows;
};

struct Relation {
  int source = 0;
  int target = 0;
  std::vector<RelationTerm> terms;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
};

/// Coefficient vector over the path basis of an algebra.
using AlgElem = std::vector<Elem>;

/// A = KQ/I over F_p with a saturated path basis and multiplication table.
///
/// The basis consists of residue classes of paths ordered by length and then
/// lexicographically on arrow labels; it is the set of paths that are not
/// leading terms of the ideal under that order.
class Algebra {
 public:
  static constexpr int kDefaultBasisCap = 10000;

  static Algebra build(const Fp& field, QuiverPresentation quiver, int basis_cap = kDefaultBasisCap);

  const Fp& field() const { return field_; }
  const QuiverPresentation& quiver() const { return quiver_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_arrows() const { return quiver_.num_arrows(); }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_[i]; }
  int idempotent(int vertex) const { return idempotent_index_[vertex]; }
  int arrow_index(int arrow) const { return arrow_index_[arrow]; }

  /// Basis indices of the paths from `from` to `to`, i.e. a basis of e_from A e_to.
  const std::vector<int>& paths_between(int from, int to) const { return between_[from * num_vertices() + to]; }

  /// Normal form of a path given by its arrows (source used for trivial paths).
  AlgElem normal_form(int source, const std::vector<int>& arrows) const;

  /// Product of two basis elements as a sparse list of (index, coefficient).
  const std::vector<std::pair<int, Elem>>& product(int i, int j) const;
  AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
  AlgElem zero() const { return AlgElem(basis_.size(), 0); }
  AlgElem unit_vector(int i) const;

  std::string path_string(const Path& p) const;
  std::string basis_string(int i) const { return path_string(basis_[i]); }

  /// Number of truncation levels used during saturation (paths of this length vanish).
  int nilpotency_bound() const { return nilpotency_bound_; }

 private:
  Fp field_{2};
  QuiverPresentation quiver_;
  std::vector<Path> basis_;
  std::vector<int> idempotent_index_;
  std::vector<int> arrow_index_;
  std::vector<std::vector<int>> between_;
  std::map<std::vector<int>, AlgElem> nf_;  // normal forms of nontrivial paths shorter than the bound
  std::vector<std::vector<std::pair<int, Elem>>> table_;
  int nilpotency_bound_ = 0;
};

/// Parse the line-oriented presentation format:
///   field p=3 / vertices 1 2 / arrow a: 1 -> 2 / relation 1*a.b + 2*c.d
/// `#` starts a comment. `field_override` replaces the characteristic.
Algebra load_algebra(std::string_view text, int field_override = 0);
Algebra load_algebra_file(const std::string& path, int field_override = 0);

}  // namespace torslab
