#include "subspace_bounds/projective_sdp.hpp"

#include "subspace_bounds/qhahn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

namespace subspace_bounds {

std::vector<TripleIndex> omega(int n, int d, Metric metric) {
  std::vector<TripleIndex> out;
  for (int s = 0; s <= n; ++s)
    for (int t = s; t <= n; ++t)
      for (int i = std::max(0, s + t - n); i <= s; ++i) {
        const bool diagonal = s == t && t == i;
        const bool far = metric == Metric::subspace ? s + t - 2 * i >= d : t - i >= d;
        if (diagonal || far) out.push_back({s, t, i});
      }
  return out;
}

Rational fk_entry_coeff(int k, int s, int t, int i, int n, FieldOrder q) {
  if (k < 0 || k > s || s > t || t > n - k) throw std::invalid_argument("fk_entry_coeff needs k <= s <= t <= n-k");
  if (i < std::max(0, s + t - n) || i > s) throw std::invalid_argument("fk_entry_coeff: unrealizable triple");
  Rational r(qbinom(t - k, s - k, q), qbinom(n, t, q) * qbinom(t, s, q) * qbinom(n - 2 * k, s - k, q));
  r.canonicalize();
  r *= power(q.value(), -k * (s - k));
  r *= hahn_value(k, n, s, t, s - i, q);
  return r;
}

std::vector<Rational> dimension_sum(const std::vector<TripleIndex>& triples, int s) {
  std::vector<Rational> out(triples.size(), Rational(0));
  for (std::size_t j = 0; j < triples.size(); ++j) {
    const auto& tau = triples[j];
    if (tau.s == tau.t) {
      if (tau.s == s) out[j] = 1;
    } else {
      out[j] = (tau.s == s ? 1 : 0) + (tau.t == s ? 1 : 0);
    }
  }
  return out;
}

ReducedSdp sdp_model(const ProjectiveParams& p, const SdpModelOptions& options, const GrassmannCap& cap) {
  if (p.n < 0 || p.d < 1) throw std::invalid_argument("sdp_model needs n >= 0 and d >= 1");
  if (p.n > 0) p.validate();
  const int n = p.n;
  ReducedSdp model{p, omega(n, p.d, p.metric), {}, {}};
  auto& prog = model.program;
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (std::size_t j = 0; j < model.triples.size(); ++j) {
    const auto& tau = model.triples[j];
    prog.add_variable("x_" + std::to_string(tau.s) + "_" + std::to_string(tau.t) + "_" + std::to_string(tau.i),
                      Rational(tau.multiplicity()));
    if (tau.s == tau.t && tau.t == tau.i) prog.normalization[j] = 1;
    by_pair[{tau.s, tau.t}].push_back(static_cast<int>(j));
  }

  for (int k = 0; 2 * k <= n; ++k) {
    SdpBlock block("F_" + std::to_string(k), n - 2 * k + 1);
    for (int s = k; s <= n - k; ++s)
      for (int t = s; t <= n - k; ++t) {
        auto it = by_pair.find({s, t});
        if (it == by_pair.end()) continue;
        for (int j : it->second)
          add_term(block.at(s - k, t - k), j, fk_entry_coeff(k, s, t, model.triples[j].i, n, p.q));
      }
    prog.blocks.push_back(std::move(block));
  }

  auto add_row = [&](std::string tag, int index, std::vector<Rational> coeffs, const Rational& rhs) {
    prog.rows.push_back({tag, index, std::move(coeffs), RowSense::less_equal, rhs});
    model.cut_tags.push_back(prog.rows.back().name());
  };
  if (options.dimension_cuts)
    for (int s = 0; s <= n; ++s)
      add_row("dimension_cap", s, dimension_sum(model.triples, s), Rational(cap(n, s, cap_delta(p), p.q)));

  // a row over the dimension counts D_0..D_n, rewritten over the triples
  auto over_triples = [&](const std::vector<Rational>& dims) {
    std::vector<Rational> coeffs(model.triples.size(), Rational(0));
    for (int s = 0; s <= n; ++s) {
      if (sgn(dims[s]) == 0) continue;
      const auto ds = dimension_sum(model.triples, s);
      for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += dims[s] * ds[j];
    }
    return coeffs;
  };
  if (options.theorem51_cuts && n > 0)
    for (const auto& r : theorem51_cuts(p, cap).rows) add_row(r.tag, r.index, over_triples(r.coeffs), r.rhs);
  if (options.packing_rows && n > 0) {
    const LinearProgram ev = ev_model(p, cap);
    for (const auto& r : ev.rows)
      if (r.tag == "packing") add_row(r.tag, r.index, over_triples(r.coeffs), r.rhs);
  }
  if (options.condition) condition_blocks(prog);
  return model;
}

BigInt safe_floor(double value, double gap) {
  const Rational v = rational_from_double(value) + 10 * rational_from_double(std::fabs(gap));
  return floor(v);
}

SdpBoundReport solve_sdp(const ReducedSdp& model, const IpmOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SdpBoundReport rep;
  rep.params = model.params;
  const IpmResult res = ipm_solve(lower_to_sdpa(model.program), options);
  rep.status = res.status;
  rep.value = res.primal_value;
  rep.dual_value = res.dual_value;
  rep.gap = res.gap;
  rep.relative_gap = res.relative_gap;
  rep.iterations = res.iterations;
  rep.message = res.message;
  rep.x = res.x;
  if (res.status == IpmStatus::optimal) rep.floored = safe_floor(res.primal_value, res.gap);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<Rational> code_point(const std::vector<TripleIndex>& triples, const std::vector<TripleIndex>& pair_types,
                                 long code_size) {
  std::map<TripleIndex, long> counts;
  for (const auto& pt : pair_types)
    if (pt.s <= pt.t) ++counts[pt];
  std::vector<Rational> x(triples.size(), Rational(0));
  for (const auto& [tau, cnt] : counts) {
    auto it = std::lower_bound(triples.begin(), triples.end(), tau);
    if (it == triples.end() || *it != tau) throw std::invalid_argument("code has a pair outside omega");
    Rational v(cnt, code_size);
    v.canonicalize();
    x[it - triples.begin()] = v;
  }
  return x;
}

}  // namespace subspace_bounds
