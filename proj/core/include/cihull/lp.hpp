#pragma once

#include <cstddef>
#include <vector>

namespace cihull {

// A linear program in the form
//
//   optimize  c . x
//   subject to  rows[i] . x == rhs[i]      for each i
//               lower[j] <= x[j] <= upper[j]
//
// Bounds may be infinite on either side.  An empty objective means a pure
// feasibility problem.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> lower;  // size num_vars, entries may be -inf
  std::vector<double> upper;  // size num_vars, entries may be +inf
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> objective;  // empty or size num_vars
  bool maximize = false;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> point;  // populated when status == Feasible
  double objective = 0.0;     // value of c . x when feasible
  // Phase-one constraint violation at the returned basis.  Near zero for
  // feasible problems; strictly positive when infeasible.
  double infeasibility = 0.0;
};

// Dense two-phase simplex with Bland's rule.  Intended for the small
// systems this library produces (tens of variables); throws
// NumericalBreakdown if pivots degenerate.
LpResult lp_solve(const LinearProgram& lp, double feas_tol = 1e-10);

}  // namespace cihull
