#include "subspace_bounds/oracle.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <set>
#include <stdexcept>

namespace subspace_bounds::oracle {

std::vector<std::uint32_t> rref(std::vector<std::uint32_t> vectors) {
  std::vector<std::uint32_t> rows;
  for (auto v : vectors) {
    for (auto r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    if (v == 0) continue;
    const auto pivot = std::bit_floor(v);
    for (auto& r : rows)
      if (r & pivot) r ^= v;
    rows.push_back(v);
    // keep rows sorted by pivot so reductions above see every pivot
    std::sort(rows.begin(), rows.end(), std::greater<>());
  }
  return rows;
}

Subspace span(int n, const std::vector<std::uint32_t>& vectors) {
  if (n < 0 || n > 6) throw std::invalid_argument("oracle supports 0 <= n <= 6");
  Subspace s;
  s.n = n;
  s.basis = rref(vectors);
  s.dim = static_cast<int>(s.basis.size());
  s.elements = 0;
  for (std::uint32_t c = 0; c < (1u << s.dim); ++c) {
    std::uint32_t v = 0;
    for (int j = 0; j < s.dim; ++j)
      if (c >> j & 1u) v ^= s.basis[j];
    s.elements |= std::uint64_t{1} << v;
  }
  return s;
}

std::vector<Subspace> enumerate_projective(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("oracle supports 0 <= n <= 6");
  std::set<std::vector<std::uint32_t>> seen{{}};
  std::vector<std::vector<std::uint32_t>> frontier{{}};
  std::vector<Subspace> out{span(n, {})};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& basis : frontier)
      for (std::uint32_t v = 1; v < (1u << n); ++v) {
        auto ext = basis;
        ext.push_back(v);
        auto r = rref(ext);
        if (r.size() == basis.size()) continue;
        if (seen.insert(r).second) {
          out.push_back(span(n, r));
          next.push_back(std::move(r));
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.basis < b.basis;
  });
  return out;
}

int intersection_dim(const Subspace& u, const Subspace& v) {
  return std::countr_zero(static_cast<unsigned>(std::popcount(u.elements & v.elements)));
}

int sum_dim(const Subspace& u, const Subspace& v) {
  auto stacked = u.basis;
  stacked.insert(stacked.end(), v.basis.begin(), v.basis.end());
  return static_cast<int>(rref(stacked).size());
}

int distance(const Subspace& u, const Subspace& v, Metric metric) {
  const int cap = u.dim + v.dim - sum_dim(u, v);
  if (metric == Metric::subspace) return u.dim + v.dim - 2 * cap;
  return std::max(u.dim, v.dim) - cap;
}

std::vector<std::vector<bool>> conflict_graph(const std::vector<Subspace>& spaces, int d, Metric metric) {
  const std::size_t N = spaces.size();
  std::vector<std::vector<bool>> adj(N, std::vector<bool>(N, false));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      const int dist = distance(spaces[a], spaces[b], metric);
      if (dist > 0 && dist < d) adj[a][b] = adj[b][a] = true;
    }
  return adj;
}

namespace {

using Bits = std::bitset<128>;

struct CliqueSearch {
  // maximum clique in the compatibility graph = independent set in the conflict graph
  std::vector<Bits> compat;
  std::vector<int> current;
  std::vector<int> best;

  void expand(Bits candidates) {
    // greedy colouring of the candidates into independent sets of compat
    std::vector<int> order;
    std::vector<int> colour;
    Bits uncoloured = candidates;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits avail = uncoloured;
      while (avail.any()) {
        int v = 0;
        while (!avail[v]) ++v;
        avail.reset(v);
        avail &= ~compat[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (current.size() + colour[idx] <= best.size()) return;
      const int v = order[idx];
      current.push_back(v);
      const Bits next = candidates & compat[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }
};

}  // namespace

CodeResult max_independent_set(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t N = adjacency.size();
  if (N > 128) throw std::invalid_argument("max_independent_set handles at most 128 vertices");
  CliqueSearch search;
  search.compat.assign(N, Bits{});
  Bits all;
  for (std::size_t a = 0; a < N; ++a) {
    all.set(a);
    for (std::size_t b = 0; b < N; ++b)
      if (a != b && !adjacency[a][b]) search.compat[a].set(b);
  }
  if (N > 0) search.expand(all);
  CodeResult out;
  out.code = search.best;
  std::sort(out.code.begin(), out.code.end());
  out.size = static_cast<int>(out.code.size());
  return out;
}

CodeResult max_code_exact(int n, int d, Metric metric) {
  if (n > 4) throw std::invalid_argument("max_code_exact supports n <= 4");
  const auto spaces = enumerate_projective(n);
  return max_independent_set(conflict_graph(spaces, d, metric));
}

SemidefiniteProgram theta_prime_program(const std::vector<std::vector<bool>>& adjacency) {
  const int N = static_cast<int>(adjacency.size());
  SemidefiniteProgram prog;
  SdpBlock block("F", N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      if (adjacency[a][b]) continue;
      const int j = prog.add_variable("F_" + std::to_string(a) + "_" + std::to_string(b), Rational(a == b ? 1 : 2));
      if (a == b) prog.normalization[j] = 1;
      add_term(block.at(a, b), j, Rational(1));
    }
  prog.blocks.push_back(std::move(block));
  return prog;
}

IpmResult theta_prime(const std::vector<std::vector<bool>>& adjacency, const IpmOptions& options) {
  return ipm_solve(lower_to_sdpa(theta_prime_program(adjacency)), options);
}

IpmResult theta_prime_unreduced(int n, int d, Metric metric, const IpmOptions& options) {
  if (n > 4) throw std::invalid_argument("theta_prime_unreduced supports n <= 4");
  const auto spaces = enumerate_projective(n);
  return theta_prime(conflict_graph(spaces, d, metric), options);
}

}  // namespace subspace_bounds::oracle
