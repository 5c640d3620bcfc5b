#pragma once

#include "subspace_bounds/exact.hpp"

#include <memory>
#include <vector>

namespace subspace_bounds {

/// q-Hahn polynomial Q_l(n,s,t;u), stored as coefficients c_0..c_l in
/// powers of the bracket variable [u], so Q_l(u) = sum_j c_j [u]^j.
struct HahnPolynomial {
  int n;
  int s;
  int t;
  int degree;
  FieldOrder q;
  std::vector<Rational> coeffs;
};

/// The whole family Q_0..Q_L with L = min(s, n - t), built by exact
/// Gram-Schmidt on 1, [u], [u]^2, ... under the weights hahn_weight and
/// normalized to Q_l(0) = 1. Throws unless 0 <= s <= t <= n.
std::vector<HahnPolynomial> hahn_family(int n, int s, int t, FieldOrder q);

Rational hahn_eval(const HahnPolynomial& p, int u);

/// Memoized table values[l][u] = Q_l(n,s,t;u) for 0 <= l, u <= min(s, n-t).
/// Safe for concurrent use.
std::shared_ptr<const std::vector<std::vector<Rational>>> hahn_values(int n, int s, int t, FieldOrder q);

/// Q_l(n,s,t;u) through the memoized table; throws if l or u is out of range.
Rational hahn_value(int l, int n, int s, int t, int u, FieldOrder q);

}  // namespace subspace_bounds
