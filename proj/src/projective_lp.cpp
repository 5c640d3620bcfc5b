#include "subspace_bounds/projective_lp.hpp"

#include "subspace_bounds/grassmann.hpp"

#include <stdexcept>

namespace subspace_bounds {

BigInt combined_cap(int n, int k, int delta, FieldOrder q) { return combined_bound({n, k, delta, q}); }

int cap_delta(const ProjectiveParams& p) { return p.metric == Metric::subspace ? ceil_div2(p.d) : p.d; }

int packing_radius(int d) { return (d - 1) / 2; }

LinearProgram ev_model(const ProjectiveParams& p, const GrassmannCap& cap) {
  if (p.n < 1) throw std::invalid_argument("n must be >= 1");
  if (p.d < 1 || p.d > 2 * p.n) throw std::invalid_argument("d must satisfy 1 <= d <= 2n");
  const int n = p.n;
  const int e = packing_radius(p.d);
  const int delta = cap_delta(p);
  LinearProgram lp;
  for (int k = 0; k <= n; ++k) lp.add_variable("x_" + std::to_string(k), 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[k] = 1;
    lp.add_row("dimension_cap", k, std::move(coeffs), RowSense::less_equal, Rational(cap(n, k, delta, p.q)));
  }
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> coeffs(n + 1);
    for (int i = 0; i <= n; ++i)
      coeffs[i] = Rational(p.metric == Metric::subspace ? ball_slice_subspace(n, i, k, e, p.q)
                                                        : ball_slice_injection(n, i, k, e, p.q));
    lp.add_row("packing", k, std::move(coeffs), RowSense::less_equal, Rational(qbinom(n, k, p.q)));
  }
  return lp;
}

std::vector<std::string> CutSet::tags() const {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.name());
  return out;
}

bool theorem51_applies(int n, int d) {
  const int c = ceil_div2(d);
  return d + 2 * c + 2 < 2 * n && 2 * n < 2 * d + 2 * c + 2;
}

CutSet theorem51_cuts(int n, int d, FieldOrder q, const BigInt& cap_c) {
  CutSet cuts;
  if (!theorem51_applies(n, d)) return cuts;
  const int c = ceil_div2(d);
  const int m = 2 * n - d - c - 1;
  auto unit_row = [&](std::initializer_list<int> dims) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (int k : dims) coeffs[k] += 1;
    return coeffs;
  };
  cuts.rows.push_back({"theorem51_single", m, unit_row({m}), RowSense::less_equal, Rational(1)});
  const BigInt num = power_int(q.value(), n) - power_int(q.value(), m);
  const BigInt den = power_int(q.value(), c) - power_int(q.value(), n - d - 1);
  const BigInt B = floor(Rational(num, den));
  if (B <= cap_c - 1) {
    cuts.rows.push_back({"theorem51_pair", c, unit_row({c, m}), RowSense::less_equal, Rational(cap_c)});
    cuts.rows.push_back({"complement_pair", n - c, unit_row({n - c, n - m}), RowSense::less_equal, Rational(cap_c)});
  }
  return cuts;
}

CutSet theorem51_cuts(const ProjectiveParams& p, const GrassmannCap& cap) {
  if (p.metric != Metric::subspace) return {};
  const int c = ceil_div2(p.d);
  return theorem51_cuts(p.n, p.d, p.q, cap(p.n, c, c, p.q));
}

EvResult solve_ev(const LinearProgram& model, const CutSet& cuts, EvMode mode) {
  LinearProgram lp = model;
  for (const auto& r : cuts.rows) lp.rows.push_back(r);
  EvResult out;
  if (mode == EvMode::real) {
    const auto sol = simplex_solve(lp);
    out.status = sol.status;
    out.value = sol.objective;
    out.primal = sol.primal;
    out.work = sol.pivots;
  } else {
    lp.integer.assign(lp.num_variables(), true);
    const auto sol = branch_and_bound(lp);
    out.status = sol.status;
    out.value = sol.objective;
    out.primal = sol.primal;
    out.work = sol.nodes;
  }
  if (out.status != LpStatus::optimal)
    throw std::runtime_error("projective LP is " + std::string(status_name(out.status)) + "; the model is malformed");
  out.floored = floor(out.value);
  return out;
}

}  // namespace subspace_bounds
