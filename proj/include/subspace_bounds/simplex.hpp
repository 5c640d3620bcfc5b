#pragma once

#include "subspace_bounds/linear_program.hpp"

#include <optional>
#include <vector>

namespace subspace_bounds {

enum class LpStatus { optimal, infeasible, unbounded };

std::string_view status_name(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> primal;
  /// One multiplier per row of the input program, signed for the
  /// Lagrangian dual of the stated direction.
  std::vector<Rational> dual;
  long pivots = 0;
};

/// Two-phase primal simplex in exact rational arithmetic with Bland's
/// rule, so it always terminates.
LpSolution simplex_solve(const LinearProgram& lp);

/// Same algorithm in double precision; no certificate, for timing only.
struct FloatLpSolution {
  LpStatus status = LpStatus::infeasible;
  double objective = 0;
  std::vector<double> primal;
};
FloatLpSolution simplex_solve_float(const LinearProgram& lp);

/// Checks primal feasibility, dual feasibility and equal objectives
/// exactly. Returns an explanation of the first violation, or nullopt.
std::optional<std::string> certificate_violation(const LinearProgram& lp, const LpSolution& solution);

struct IntegerSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> primal;
  long nodes = 0;
};

/// Exact integer optimum over the variables flagged in lp.integer by
/// best-first branch and bound on the LP relaxation, branching on the
/// most fractional variable.
IntegerSolution branch_and_bound(const LinearProgram& lp);

}  // namespace subspace_bounds
