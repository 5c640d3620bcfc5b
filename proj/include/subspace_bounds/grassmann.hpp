#pragma once

#include "subspace_bounds/linear_program.hpp"
#include "subspace_bounds/qcombinat.hpp"

#include <optional>
#include <vector>

namespace subspace_bounds {

// Upper bounds on A_q(n, k, 2*delta). Every routine first replaces k by
// min(k, n - k) (orthogonal complements preserve distances) and returns 1
// when delta exceeds the normalized k, since no two distinct k-spaces are
// that far apart.

enum class GrassmannMethod {
  sphere_packing,
  singleton,
  anticode,
  johnson1,
  johnson2_chain,
  combined,
  delsarte_lp,
  best,
};

std::string_view method_name(GrassmannMethod method);
GrassmannMethod parse_grassmann_method(std::string_view name);

struct GrassmannBoundReport {
  GrassmannParams params;
  GrassmannMethod method;
  Rational value;
  BigInt floored;
  bool applicable = true;
  /// For method == best: the method that attained the minimum.
  std::optional<GrassmannMethod> attained_by;
};

Rational sphere_packing_bound(const GrassmannParams& p);
BigInt singleton_bound(const GrassmannParams& p);
Rational anticode_bound(const GrassmannParams& p);

/// Absent when (q^k-1)^2 - (q^n-1)(q^{k-delta}-1) <= 0.
std::optional<BigInt> johnson1_bound(const GrassmannParams& p);

/// Second Johnson bound iterated down to A_q(n-k+delta, delta, 2 delta),
/// with a floor at every level.
BigInt johnson2_chain_bound(const GrassmannParams& p);

/// The nested-floor chain sharpened at its innermost level by one when
/// n - k is not divisible by delta; exact spread size when delta = k | n.
BigInt combined_bound(const GrassmannParams& p);

/// Delsarte's LP: minimize 1 + f_1 + ... + f_k over f >= 0 with
/// 1 + sum_i f_i Q_i(n,k,k;u) <= 0 for u = delta..k.
LinearProgram delsarte_lp_model(const GrassmannParams& p);
Rational delsarte_lp_bound(const GrassmannParams& p);

GrassmannBoundReport grassmann_bound(const GrassmannParams& p, GrassmannMethod method);

/// Minimum floored value over the applicable methods in the list; the
/// default list is {combined}.
GrassmannBoundReport best_grassmann_bound(const GrassmannParams& p,
                                          const std::vector<GrassmannMethod>& methods = {GrassmannMethod::combined});

std::vector<GrassmannMethod> all_grassmann_methods();

}  // namespace subspace_bounds
