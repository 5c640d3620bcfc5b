#pragma once

#include "subspace_bounds/exact.hpp"

namespace subspace_bounds {

/// Parameters of a constant-dimension (Grassmann) code problem
/// A_q(n, k, 2*delta).
struct GrassmannParams {
  int n;
  int k;
  int delta;
  FieldOrder q;

  /// Throws std::invalid_argument unless 0 <= k <= n and delta >= 1.
  void validate() const;
};

enum class Metric { subspace, injection };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);

/// Parameters of a projective code problem A_q(n, d) or A^inj_q(n, d).
struct ProjectiveParams {
  int n;
  int d;
  FieldOrder q;
  Metric metric = Metric::subspace;

  /// Throws std::invalid_argument unless n >= 1 and 1 <= d <= n.
  void validate() const;
};

/// Gaussian binomial [n choose k]_q; zero whenever k < 0, k > n or n < 0.
/// Memoized; safe to call from several threads.
BigInt qbinom(int n, int k, FieldOrder q);

/// The bracket variable [u] = q^{1-u} [u choose 1]_q = (q - q^{1-u}) / (q - 1).
Rational bracket(int u, FieldOrder q);

/// w(n,s,t;i) = [s choose i] [n-s choose t-s+i] q^{i(t-s+i)}: for a fixed
/// s-space x, the number of t-spaces y with dim(x cap y) = s - i.
BigInt hahn_weight(int n, int s, int t, int i, FieldOrder q);

/// N_sti: ordered pairs (x, y) with dim x = s, dim y = t, dim(x cap y) = i.
/// Unrealizable triples give 0.
BigInt pair_count(int n, int s, int t, int i, FieldOrder q);

/// Size of a subspace-distance ball of radius e around an i-space.
BigInt ball_size_subspace(int n, int i, int e, FieldOrder q);

/// c(i,k,e): number of k-spaces within subspace distance e of an i-space.
BigInt ball_slice_subspace(int n, int i, int k, int e, FieldOrder q);

/// Size of an injection-distance ball of radius e around an i-space.
BigInt ball_size_injection(int n, int i, int e, FieldOrder q);

/// c^inj(i,k,e): number of k-spaces within injection distance e of an i-space.
BigInt ball_slice_injection(int n, int i, int k, int e, FieldOrder q);

/// Total number of subspaces of F_q^n.
BigInt projective_space_size(int n, FieldOrder q);

}  // namespace subspace_bounds
