#pragma once

#include "subspace_bounds/ipm.hpp"
#include "subspace_bounds/projective_lp.hpp"
#include "subspace_bounds/sdp_data.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace subspace_bounds {

/// Orbit of a pair (x, y) with dim x = s <= t = dim y and dim(x cap y) = i.
struct TripleIndex {
  int s;
  int t;
  int i;
  int multiplicity() const { return s == t ? 1 : 2; }
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

/// Realizable triples (max(0, s+t-n) <= i <= s <= t <= n) that are either
/// diagonal (s = t = i) or far enough apart: s + t - 2i >= d for the
/// subspace metric, t - i >= d for the injection metric. Sorted.
std::vector<TripleIndex> omega(int n, int d, Metric metric);

/// Coefficient of x_{sti} in entry (s, t) of the k-th block:
///   [t-k choose s-k] / ([n choose t] [t choose s] [n-2k choose s-k])
///     * q^{-k(s-k)} * Q_k(n, s, t; s - i).
/// Throws unless k <= s <= t <= n - k and the triple is realizable.
Rational fk_entry_coeff(int k, int s, int t, int i, int n, FieldOrder q);

struct SdpModelOptions {
  /// Rows D_s <= cap(n, s, cap_delta) for every dimension s.
  bool dimension_cuts = true;
  /// The dimension-distribution cuts of projective_lp, written in terms of D_s.
  bool theorem51_cuts = false;
  /// Packing rows of the LP added to the SDP; numerically fragile.
  bool packing_rows = false;
  /// Power-of-two diagonal congruence on each block.
  bool condition = true;
};

struct ReducedSdp {
  ProjectiveParams params;
  std::vector<TripleIndex> triples;
  SemidefiniteProgram program;
  std::vector<std::string> cut_tags;
};

/// D_s = sum over t, i of x_{sti} with both orientations counted, as a
/// coefficient vector over the triples.
std::vector<Rational> dimension_sum(const std::vector<TripleIndex>& triples, int s);

/// Variables x_tau for tau in omega; maximize sum multiplicity * x_tau
/// subject to sum_s x_sss = 1 and blocks k = 0..floor(n/2) of size
/// n - 2k + 1 PSD. Accepts n = 0 (a single variable x_000).
ReducedSdp sdp_model(const ProjectiveParams& p, const SdpModelOptions& options = {},
                     const GrassmannCap& cap = combined_cap);

struct SdpBoundReport {
  ProjectiveParams params{1, 1, FieldOrder(2)};
  IpmStatus status = IpmStatus::numerical_failure;
  double value = 0;
  double dual_value = 0;
  double gap = 0;
  double relative_gap = 0;
  /// floor(value + 10 gap), present only when the solve converged.
  std::optional<BigInt> floored;
  int iterations = 0;
  double wall_ms = 0;
  std::string message;
  std::vector<double> x;
};

/// floor(value + 10 * gap) computed without losing integer precision.
BigInt safe_floor(double value, double gap);

SdpBoundReport solve_sdp(const ReducedSdp& model, const IpmOptions& options = {});

/// Exact point of the reduced program induced by a code: x_{sti} is the
/// number of ordered pairs (x, y) in the code of that orbit type with
/// dim x = s, dim y = t, divided by the code size. pair_types[j] lists
/// (dim x, dim y, dim x cap y) for all ordered pairs.
std::vector<Rational> code_point(const std::vector<TripleIndex>& triples,
                                 const std::vector<TripleIndex>& pair_types, long code_size);

}  // namespace subspace_bounds
