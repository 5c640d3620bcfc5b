#pragma once

#include "subspace_bounds/linear_program.hpp"
#include "subspace_bounds/qcombinat.hpp"
#include "subspace_bounds/simplex.hpp"

#include <functional>
#include <string>
#include <vector>

namespace subspace_bounds {

/// Upper bound for A_q(n, k, 2 delta), used for the per-dimension caps.
using GrassmannCap = std::function<BigInt(int n, int k, int delta, FieldOrder q)>;

/// The default cap: the nested-floor bound of grassmann.hpp.
BigInt combined_cap(int n, int k, int delta, FieldOrder q);

/// Half-distance handed to the cap: ceil(d/2) for the subspace metric and
/// d for the injection metric (two k-spaces at injection distance d are
/// at subspace distance 2d).
int cap_delta(const ProjectiveParams& p);

/// Packing radius floor((d-1)/2), for both metrics.
int packing_radius(int d);

/// Variables x_0..x_n (x_k counts the k-dimensional codewords), maximize
/// their sum subject to x_k <= cap(n, k, cap_delta) (tag dimension_cap)
/// and sum_i c(i,k,e) x_i <= [n choose k] (tag packing) for every k, with
/// c or c^inj by metric. Throws unless n >= 1 and 1 <= d <= 2n.
LinearProgram ev_model(const ProjectiveParams& p, const GrassmannCap& cap = combined_cap);

struct CutSet {
  std::vector<LinearRow> rows;
  bool empty() const { return rows.empty(); }
  std::vector<std::string> tags() const;
};

/// Whether d + 2c + 2 < 2n < 2d + 2c + 2 with c = ceil(d/2).
bool theorem51_applies(int n, int d);

/// Extra rows for the subspace metric inside the window: D_m <= 1 with
/// m = 2n - d - c - 1, and, when floor((q^n - q^m) / (q^c - q^{n-d-1}))
/// is at most cap_c - 1, the linearized rows D_c + D_m <= cap_c and
/// D_{n-c} + D_{n-m} <= cap_c. Empty outside the window.
CutSet theorem51_cuts(int n, int d, FieldOrder q, const BigInt& cap_c);

/// Same, with cap_c = cap(n, c, c); empty for the injection metric.
CutSet theorem51_cuts(const ProjectiveParams& p, const GrassmannCap& cap = combined_cap);

enum class EvMode { real, integer };

struct EvResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  BigInt floored;
  std::vector<Rational> primal;
  /// Simplex pivots (real mode) or branch-and-bound nodes (integer mode).
  long work = 0;
};

/// Exact optimum of model + cuts; throws if the program is infeasible or
/// unbounded, which would indicate a malformed model.
EvResult solve_ev(const LinearProgram& model, const CutSet& cuts, EvMode mode);

}  // namespace subspace_bounds
