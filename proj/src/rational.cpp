#include "torslab/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace torslab {

StabilityVector StabilityVector::from_ints(const std::vector<long long>& v) {
  StabilityVector s;
  for (long long x : v) s.coords.emplace_back(x);
  return s;
}

bool StabilityVector::lattice() const {
  for (const auto& c : coords)
    if (c.denominator() != 1) return false;
  return true;
}

std::vector<long long> StabilityVector::integer_coords() const {
  if (!lattice()) throw std::invalid_argument("stability vector is not integral");
  std::vector<long long> out;
  for (const auto& c : coords) out.push_back(c.numerator());
  return out;
}

StabilityVector StabilityVector::scaled(Rational q) const {
  StabilityVector s = *this;
  for (auto& c : s.coords) c *= q;
  return s;
}

std::string StabilityVector::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i].numerator();
    if (coords[i].denominator() != 1) os << "/" << coords[i].denominator();
  }
  return os.str();
}

StabilityVector parse_theta(std::string_view text) {
  StabilityVector s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (tok.empty()) throw std::invalid_argument("empty coordinate in theta");
    size_t slash = tok.find('/');
    try {
      long long num = std::stoll(tok.substr(0, slash));
      long long den = slash == std::string::npos ? 1 : std::stoll(tok.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in theta");
      s.coords.emplace_back(num, den);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse theta coordinate '" + tok + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

Rational euler_pairing(const StabilityVector& theta, const DimVector& v, const std::vector<int>& end_dims) {
  if (theta.coords.size() != v.size() || v.size() != end_dims.size())
    throw std::invalid_argument("euler_pairing: length mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < v.size(); ++i) acc += theta.coords[i] * Rational(end_dims[i]) * Rational(v[i]);
  return acc;
}

std::vector<StabilityVector> lattice_grid(int n, int lo, int hi) {
  std::vector<StabilityVector> out;
  std::vector<long long> cur(n, lo);
  if (lo > hi) return out;
  while (true) {
    out.push_back(StabilityVector::from_ints(cur));
    int k = n - 1;
    while (k >= 0 && cur[k] == hi) cur[k--] = lo;
    if (k < 0) return out;
    ++cur[k];
  }
}

}  // namespace torslab
