#pragma once

// Brute force over F_2 for tiny ambient dimension: every subspace is
// stored as the bit mask of its 2^dim elements (so n <= 6) together with
// its reduced row echelon basis.

#include "subspace_bounds/ipm.hpp"
#include "subspace_bounds/qcombinat.hpp"

#include <cstdint>
#include <vector>

namespace subspace_bounds::oracle {

struct Subspace {
  int n = 0;
  int dim = 0;
  /// Bit v is set iff the vector with coordinate bits v lies in the space.
  std::uint64_t elements = 1;
  /// RREF rows: pivots are the leading bits, strictly decreasing, and no
  /// other row has a pivot bit set.
  std::vector<std::uint32_t> basis;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n == b.n && a.elements == b.elements; }
};

/// Canonical RREF basis of the span of the given vectors.
std::vector<std::uint32_t> rref(std::vector<std::uint32_t> vectors);
Subspace span(int n, const std::vector<std::uint32_t>& vectors);

/// All subspaces of F_2^n, each once, ordered by dimension then by basis.
std::vector<Subspace> enumerate_projective(int n);

int intersection_dim(const Subspace& u, const Subspace& v);
/// Rank of the stacked bases.
int sum_dim(const Subspace& u, const Subspace& v);
int distance(const Subspace& u, const Subspace& v, Metric metric);

/// Conflict graph on the subspaces: an edge when 0 < distance < d.
std::vector<std::vector<bool>> conflict_graph(const std::vector<Subspace>& spaces, int d, Metric metric);

struct CodeResult {
  int size = 0;
  std::vector<int> code;
};

/// Maximum independent set by branch and bound with a greedy colouring
/// bound; at most 128 vertices.
CodeResult max_independent_set(const std::vector<std::vector<bool>>& adjacency);

/// Exact A_2(n, d) or A^inj_2(n, d) with a witness code (indices into
/// enumerate_projective(n)); n <= 4.
CodeResult max_code_exact(int n, int d, Metric metric);

/// theta' of a graph: maximize the sum of all entries of F subject to
/// trace F = 1, F_xy = 0 on edges, F >= 0 entrywise and F PSD.
SemidefiniteProgram theta_prime_program(const std::vector<std::vector<bool>>& adjacency);
IpmResult theta_prime(const std::vector<std::vector<bool>>& adjacency, const IpmOptions& options = {});

/// theta' of the conflict graph of P(F_2^n); refuses n > 4.
IpmResult theta_prime_unreduced(int n, int d, Metric metric, const IpmOptions& options = {});

}  // namespace subspace_bounds::oracle
