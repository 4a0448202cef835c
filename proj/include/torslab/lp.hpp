#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torslab {

using BigRational = boost::multiprecision::cpp_rational;

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<BigRational> x;
  BigRational value;
};

/// Exact two-phase simplex with Bland's rule: maximize c.x subject to A x = b, x >= 0.
LPResult solve_lp(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b, const std::vector<BigRational>& c);

/// Feasibility only (zero objective).
LPResult find_feasible(const std::vector<std::vector<BigRational>>& a, const std::vector<BigRational>& b);

}  // namespace torslab
