#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "torslab/representation.hpp"

// Under C++20 rewritten comparisons, rational<long long> == integer recurses inside Boost.
namespace boost {
template <std::integral T> bool operator==(const rational<long long>&, const T&) = delete;
template <std::integral T> bool operator!=(const rational<long long>&, const T&) = delete;
template <std::integral T> bool operator==(const T&, const rational<long long>&) = delete;
template <std::integral T> bool operator!=(const T&, const rational<long long>&) = delete;
}  // namespace boost

namespace torslab {

using Rational = boost::rational<long long>;

/// theta in the projective basis [P(1)], ..., [P(n)] of K_0(proj A).
struct StabilityVector {
  std::vector<Rational> coords;

  static StabilityVector from_ints(const std::vector<long long>& v);
  int size() const { return static_cast<int>(coords.size()); }
  /// True iff every coordinate is integral.
  bool lattice() const;
  std::vector<long long> integer_coords() const;  // requires lattice()
  StabilityVector scaled(Rational q) const;
  std::string to_string() const;
  bool operator==(const StabilityVector& o) const { return coords == o.coords; }
  bool operator<(const StabilityVector& o) const { return coords < o.coords; }
};

/// Parse "1,-1" or "1/2,-3/2".
StabilityVector parse_theta(std::string_view text);

/// <theta, v> = sum_i theta_i c_i v_i with c_i = dim End(S(i)).
Rational euler_pairing(const StabilityVector& theta, const DimVector& v, const std::vector<int>& end_dims);

/// Integer lattice points of [lo, hi]^n in lexicographic order.
std::vector<StabilityVector> lattice_grid(int n, int lo, int hi);

}  // namespace torslab
