#pragma once

#include "subspace_bounds/sdp_data.hpp"

#include <string>
#include <vector>

namespace subspace_bounds {

enum class IpmPrecision { double_precision, quad_precision };
enum class IpmStatus { optimal, max_iterations, numerical_failure, infeasible };

std::string_view status_name(IpmStatus status);

struct IpmOptions {
  /// Stop once the relative gap and both relative infeasibilities are below.
  double tol = 1e-8;
  int max_iterations = 200;
  IpmPrecision precision = IpmPrecision::quad_precision;
  /// Threads for the Schur complement; <= 0 uses the OpenMP default.
  int threads = 0;
  bool verbose = false;
};

/// Values refer to the SDPA data read as  maximize -c.x  subject to
/// sum x_i F_i - F_0 PSD.  primal_value is -c.x at the returned x;
/// dual_value is the objective of the matrix iterate, an upper bound
/// once the iterates are feasible.
struct IpmResult {
  IpmStatus status = IpmStatus::numerical_failure;
  double primal_value = 0;
  double dual_value = 0;
  /// |dual_value - primal_value|
  double gap = 0;
  double relative_gap = 0;
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  int iterations = 0;
  int eliminated_equalities = 0;
  std::vector<double> x;
  std::string message;
};

/// Infeasible-start primal-dual path following (HKM direction, Mehrotra
/// predictor-corrector). Pairs of diagonal rows that are exact negatives
/// of each other are first turned into equalities and eliminated by exact
/// substitution; rows that become constant are dropped.
IpmResult ipm_solve(const SdpData& data, const IpmOptions& options = {});

/// Exact presolve on its own, exposed for testing. recover[j] expresses
/// original variable j as constant + sum coeff * reduced variable.
struct PresolvedSdp {
  SdpData data;
  Rational constant_objective;
  std::vector<std::pair<Rational, LinearForm>> recover;
  int eliminated = 0;
};
PresolvedSdp presolve_sdp(const SdpData& data);

}  // namespace subspace_bounds
