#include "torslab/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "torslab/lp.hpp"

namespace torslab {

namespace {

Rational small(const BigRational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const cpp_int limit = cpp_int(std::numeric_limits<long long>::max());
  if (abs(num) > limit || den > limit) throw std::overflow_error("rational coordinate exceeds 64 bits");
  return Rational(num.convert_to<long long>(), den.convert_to<long long>());
}

std::vector<Rational> combination(const std::vector<IntVector>& gens, const std::vector<BigRational>& x, int offset,
                                  int n) {
  std::vector<BigRational> acc(n, 0);
  for (size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < n; ++i) acc[i] += x[offset + g] * gens[g][i];
  std::vector<Rational> out;
  for (const auto& v : acc) out.push_back(small(v));
  return out;
}

}  // namespace

IntVector primitive(const std::vector<Rational>& v) {
  long long l = 1;
  for (const auto& r : v) l = std::lcm(l, r.denominator());
  IntVector out;
  long long g = 0;
  for (const auto& r : v) {
    out.push_back(r.numerator() * (l / r.denominator()));
    g = std::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

RationalCone RationalCone::from_integer(int n, const std::vector<IntVector>& gens) {
  std::vector<std::vector<Rational>> r;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("cone generator has wrong length");
    r.emplace_back(g.begin(), g.end());
  }
  return from_rational(n, r);
}

RationalCone RationalCone::from_rational(int n, const std::vector<std::vector<Rational>>& gens) {
  std::set<IntVector> uniq;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("cone generator has wrong length");
    IntVector p = primitive(g);
    if (std::any_of(p.begin(), p.end(), [](long long x) { return x != 0; })) uniq.insert(std::move(p));
  }
  RationalCone c;
  c.dim = n;
  c.generators.assign(uniq.begin(), uniq.end());
  return c;
}

RationalCone RationalCone::negated() const {
  std::vector<IntVector> gens = generators;
  for (auto& g : gens)
    for (auto& x : g) x = -x;
  return from_integer(dim, gens);
}

RationalCone cone_of_subcat(const Catalogue& cat, const SubcatSet& s) {
  std::vector<IntVector> gens;
  for (int i : s.indices()) {
    const auto& d = cat.dims(i);
    gens.emplace_back(d.begin(), d.end());
  }
  return RationalCone::from_integer(static_cast<int>(cat.bound().size()), gens);
}

RationalCone difference_cone(const RationalCone& t, const RationalCone& f) {
  std::vector<IntVector> gens = t.generators;
  for (const auto& g : f.negated().generators) gens.push_back(g);
  return RationalCone::from_integer(t.dim, gens);
}

IntersectionResult intersect_trivially(const RationalCone& a, const RationalCone& b) {
  if (a.dim != b.dim) throw std::invalid_argument("intersect_trivially: dimension mismatch");
  IntersectionResult res;
  if (a.is_zero() || b.is_zero()) return res;
  const int n = a.dim;
  const int ka = static_cast<int>(a.generators.size());
  const int kb = static_cast<int>(b.generators.size());
  // Variables lambda (ka) and mu (kb): G lambda - H mu = 0 and s (G lambda)_k = 1.
  for (int k = 0; k < n; ++k)
    for (int s : {1, -1}) {
      std::vector<std::vector<BigRational>> rows(n + 1, std::vector<BigRational>(ka + kb, 0));
      std::vector<BigRational> rhs(n + 1, 0);
      for (int i = 0; i < n; ++i) {
        for (int g = 0; g < ka; ++g) rows[i][g] = a.generators[g][i];
        for (int h = 0; h < kb; ++h) rows[i][ka + h] = -b.generators[h][i];
      }
      for (int g = 0; g < ka; ++g) rows[n][g] = s * a.generators[g][k];
      rhs[n] = 1;
      const LPResult lp = find_feasible(rows, rhs);
      if (lp.status == LPResult::Status::Infeasible) continue;
      res.trivial = false;
      res.common = combination(a.generators, lp.x, 0, n);
      return res;
    }
  return res;
}

bool is_strongly_convex(const RationalCone& c) { return intersect_trivially(c, c.negated()).trivial; }

std::optional<StabilityVector> separating_functional(const RationalCone& t, const RationalCone& f,
                                                     const std::vector<int>& end_dims) {
  const int n = t.dim;
  const RationalCone d = difference_cone(t, f);
  if (d.is_zero()) return StabilityVector{std::vector<Rational>(n, Rational(0))};
  if (!is_strongly_convex(d)) return std::nullopt;
  // phi = z - 1 with 0 <= z <= 2, t = s - 1; maximize s subject to phi . g_hat >= t for every
  // generator g_hat normalized to coordinate-absolute-sum 1.
  const int k = static_cast<int>(d.generators.size());
  const int vars = n + 1 + n + k;  // z, s, box slacks, generator surpluses
  std::vector<std::vector<BigRational>> rows;
  std::vector<BigRational> rhs;
  for (int i = 0; i < n; ++i) {
    std::vector<BigRational> row(vars, 0);
    row[i] = 1;
    row[n + 1 + i] = 1;
    rows.push_back(row);
    rhs.push_back(2);
  }
  for (int g = 0; g < k; ++g) {
    long long l1 = 0;
    for (long long x : d.generators[g]) l1 += x < 0 ? -x : x;
    std::vector<BigRational> row(vars, 0);
    BigRational total = 0;
    for (int i = 0; i < n; ++i) {
      row[i] = BigRational(d.generators[g][i]) / l1;
      total += row[i];
    }
    row[n] = -1;
    row[2 * n + 1 + g] = -1;
    rows.push_back(row);
    rhs.push_back(total - 1);
  }
  std::vector<BigRational> c(vars, 0);
  c[n] = 1;
  const LPResult lp = solve_lp(rows, rhs, c);
  if (lp.status != LPResult::Status::Optimal || lp.value <= 1)
    throw std::logic_error("separating_functional: no positive margin on a strongly convex cone");
  std::vector<Rational> theta;
  for (int i = 0; i < n; ++i) {
    const int ci = end_dims.empty() ? 1 : end_dims[i];
    theta.push_back(small(lp.x[i] - 1) / ci);
  }
  IntVector p = primitive(theta);
  return StabilityVector::from_ints(p);
}

bool open_cones_intersect(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const int n = static_cast<int>(a[0].size());
  const int ka = static_cast<int>(a.size());
  const int kb = static_cast<int>(b.size());
  // lambda = 1 + x, mu = 1 + y with x, y >= 0 (homogeneity lets every strict positivity be scaled to >= 1).
  std::vector<std::vector<BigRational>> rows(n, std::vector<BigRational>(ka + kb, 0));
  std::vector<BigRational> rhs(n, 0);
  for (int i = 0; i < n; ++i) {
    BigRational r = 0;
    for (int g = 0; g < ka; ++g) {
      rows[i][g] = a[g][i];
      r -= a[g][i];
    }
    for (int h = 0; h < kb; ++h) {
      rows[i][ka + h] = -b[h][i];
      r += b[h][i];
    }
    rhs[i] = r;
  }
  return find_feasible(rows, rhs).status != LPResult::Status::Infeasible;
}

NumDisResult numerically_disjoint(const Catalogue& cat, const SubcatSet& t, const SubcatSet& f) {
  NumDisResult res;
  const RationalCone ct = cone_of_subcat(cat, t);
  const RationalCone cf = cone_of_subcat(cat, f);
  const IntersectionResult inter = intersect_trivially(ct, cf);
  if (!inter.trivial) {
    res.disjoint = false;
    res.common = inter.common;
    return res;
  }
  res.separator = separating_functional(ct, cf, cat.simple_end_dims());
  if (!res.separator) throw std::logic_error("numerically_disjoint: trivial intersection without a separator");
  return res;
}

std::optional<DimVector> common_class_bruteforce(const Catalogue& cat, const SubcatSet& t, const SubcatSet& f,
                                                 int max_total) {
  auto sums = [&](const SubcatSet& s) {
    std::set<DimVector> reach{DimVector(cat.bound().size(), 0)};
    std::vector<DimVector> frontier(reach.begin(), reach.end());
    while (!frontier.empty()) {
      std::vector<DimVector> next;
      for (const auto& v : frontier)
        for (int i : s.indices()) {
          if (i == 0) continue;
          DimVector w = add(v, cat.dims(i));
          if (std::accumulate(w.begin(), w.end(), 0) > max_total) continue;
          if (reach.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    reach.erase(DimVector(cat.bound().size(), 0));
    return reach;
  };
  const auto a = sums(t);
  const auto b = sums(f);
  for (const auto& v : a)
    if (b.count(v)) return v;
  return std::nullopt;
}

}  // namespace torslab
