#include "subspace_bounds/grassmann.hpp"

#include "subspace_bounds/qhahn.hpp"
#include "subspace_bounds/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace subspace_bounds {

std::string_view method_name(GrassmannMethod method) {
  switch (method) {
    case GrassmannMethod::sphere_packing: return "sphere";
    case GrassmannMethod::singleton: return "singleton";
    case GrassmannMethod::anticode: return "anticode";
    case GrassmannMethod::johnson1: return "johnson1";
    case GrassmannMethod::johnson2_chain: return "johnson2";
    case GrassmannMethod::combined: return "combined";
    case GrassmannMethod::delsarte_lp: return "delsarte-lp";
    case GrassmannMethod::best: return "best";
  }
  return "?";
}

GrassmannMethod parse_grassmann_method(std::string_view name) {
  for (auto m : all_grassmann_methods())
    if (method_name(m) == name) return m;
  if (name == "best" || name == "all") return GrassmannMethod::best;
  throw std::invalid_argument("unknown Grassmann method: " + std::string(name));
}

std::vector<GrassmannMethod> all_grassmann_methods() {
  return {GrassmannMethod::sphere_packing, GrassmannMethod::singleton,      GrassmannMethod::anticode,
          GrassmannMethod::johnson1,       GrassmannMethod::johnson2_chain, GrassmannMethod::combined,
          GrassmannMethod::delsarte_lp};
}

namespace {

struct Normalized {
  int n;
  int k;
  int delta;
  FieldOrder q;
  bool trivial;  // delta > k: any code has at most one word
};

Normalized normalize(const GrassmannParams& p) {
  p.validate();
  const int k = std::min(p.k, p.n - p.k);
  return Normalized{p.n, k, p.delta, p.q, p.delta > k};
}

BigInt qm1(FieldOrder q, int e) { return power_int(q.value(), static_cast<unsigned>(e)) - 1; }

}  // namespace

Rational sphere_packing_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  BigInt ball = 0;
  for (int m = 0; m <= (g.delta - 1) / 2; ++m)
    ball += qbinom(g.k, m, g.q) * qbinom(g.n - g.k, m, g.q) * power_int(g.q.value(), static_cast<unsigned>(m * m));
  Rational r(qbinom(g.n, g.k, g.q), ball);
  r.canonicalize();
  return r;
}

BigInt singleton_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  return qbinom(g.n - g.delta + 1, g.k - g.delta + 1, g.q);
}

Rational anticode_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  Rational r = 1;
  for (int j = 0; j <= g.k - g.delta; ++j) r *= Rational(qm1(g.q, g.n - j), qm1(g.q, g.k - j));
  r.canonicalize();
  return r;
}

std::optional<BigInt> johnson1_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return BigInt(1);
  const BigInt qn = qm1(g.q, g.n);
  const BigInt qk = qm1(g.q, g.k);
  const BigInt qkd = qm1(g.q, g.k - g.delta);
  const BigInt denom = qk * qk - qn * qkd;
  if (denom <= 0) return std::nullopt;
  const BigInt num = qn * (power_int(g.q.value(), g.k) - power_int(g.q.value(), g.k - g.delta));
  return floor(Rational(num, denom));
}

namespace {

BigInt floor_chain(const Normalized& g, bool sharpen) {
  // innermost level bounds A_q(n-k+delta, delta, 2 delta)
  BigInt value = qm1(g.q, g.n - g.k + g.delta) / qm1(g.q, g.delta);
  if (sharpen && (g.n - g.k) % g.delta != 0) value -= 1;
  for (int j = g.k - g.delta - 1; j >= 0; --j) value = (qm1(g.q, g.n - j) * value) / qm1(g.q, g.k - j);
  return value;
}

}  // namespace

BigInt johnson2_chain_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  return floor_chain(g, false);
}

BigInt combined_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  return floor_chain(g, true);
}

LinearProgram delsarte_lp_model(const GrassmannParams& p) {
  const auto g = normalize(p);
  LinearProgram lp;
  lp.direction = Direction::minimize;
  if (g.trivial) return lp;
  for (int i = 1; i <= g.k; ++i) lp.add_variable("f_" + std::to_string(i), 1);
  for (int u = g.delta; u <= g.k; ++u) {
    std::vector<Rational> coeffs;
    for (int i = 1; i <= g.k; ++i) coeffs.push_back(hahn_value(i, g.n, g.k, g.k, u, g.q));
    lp.add_row("delsarte", u, std::move(coeffs), RowSense::less_equal, Rational(-1));
  }
  return lp;
}

Rational delsarte_lp_bound(const GrassmannParams& p) {
  const auto g = normalize(p);
  if (g.trivial) return 1;
  const auto sol = simplex_solve(delsarte_lp_model(p));
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("Delsarte LP has no finite bound (status " + std::string(status_name(sol.status)) + ")");
  return 1 + sol.objective;
}

GrassmannBoundReport grassmann_bound(const GrassmannParams& p, GrassmannMethod method) {
  GrassmannBoundReport rep{p, method, 0, 0, true, std::nullopt};
  switch (method) {
    case GrassmannMethod::sphere_packing: rep.value = sphere_packing_bound(p); break;
    case GrassmannMethod::singleton: rep.value = Rational(singleton_bound(p)); break;
    case GrassmannMethod::anticode: rep.value = anticode_bound(p); break;
    case GrassmannMethod::johnson1: {
      const auto v = johnson1_bound(p);
      rep.applicable = v.has_value();
      if (v) rep.value = Rational(*v);
      break;
    }
    case GrassmannMethod::johnson2_chain: rep.value = Rational(johnson2_chain_bound(p)); break;
    case GrassmannMethod::combined: rep.value = Rational(combined_bound(p)); break;
    case GrassmannMethod::delsarte_lp: rep.value = delsarte_lp_bound(p); break;
    case GrassmannMethod::best: return best_grassmann_bound(p, all_grassmann_methods());
  }
  if (rep.applicable) rep.floored = floor(rep.value);
  return rep;
}

GrassmannBoundReport best_grassmann_bound(const GrassmannParams& p, const std::vector<GrassmannMethod>& methods) {
  GrassmannBoundReport best{p, GrassmannMethod::best, 0, 0, false, std::nullopt};
  for (auto m : methods) {
    if (m == GrassmannMethod::best) continue;
    const auto rep = grassmann_bound(p, m);
    if (!rep.applicable) continue;
    if (!best.applicable || rep.floored < best.floored) {
      best.value = rep.value;
      best.floored = rep.floored;
      best.applicable = true;
      best.attained_by = m;
    }
  }
  return best;
}

}  // namespace subspace_bounds
