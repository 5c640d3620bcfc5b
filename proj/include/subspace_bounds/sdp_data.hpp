#pragma once

#include "subspace_bounds/linear_program.hpp"

#include <string>
#include <utility>
#include <vector>

namespace subspace_bounds {

/// Sparse linear form sum_j coeff_j * x_j, sorted by variable index.
using LinearForm = std::vector<std::pair<int, Rational>>;

void add_term(LinearForm& form, int variable, const Rational& coeff);

/// Symmetric matrix whose entries are linear forms in the program
/// variables. Only the upper triangle is stored.
struct SdpBlock {
  std::string label;
  int size = 0;
  std::vector<LinearForm> upper;

  explicit SdpBlock(std::string label_ = {}, int size_ = 0);
  LinearForm& at(int row, int col);
  const LinearForm& at(int row, int col) const;
};

/// maximize objective . x over x >= 0 subject to normalization . x = 1,
/// every block PSD, and the extra linear rows.
struct SemidefiniteProgram {
  std::vector<std::string> variable_names;
  std::vector<Rational> objective;
  std::vector<Rational> normalization;
  std::vector<SdpBlock> blocks;
  std::vector<LinearRow> rows;

  int num_variables() const { return static_cast<int>(variable_names.size()); }
  int add_variable(std::string name, Rational objective_coeff);
};

/// Entry of an SDPA constraint matrix; zero-based, row <= col.
struct SdpEntry {
  int block;
  int row;
  int col;
  Rational value;
  friend bool operator==(const SdpEntry&, const SdpEntry&) = default;
};

/// SDPA-shaped exact data: minimize c . x subject to
/// sum_i x_i F_i - F_0 PSD. Negative block sizes mark diagonal blocks.
struct SdpData {
  std::vector<int> block_sizes;
  std::vector<Rational> c;
  /// matrices[0] is F_0, matrices[i] belongs to x_i.
  std::vector<std::vector<SdpEntry>> matrices;

  int num_variables() const { return static_cast<int>(c.size()); }
  friend bool operator==(const SdpData&, const SdpData&) = default;
};

/// PSD blocks first, then one diagonal block holding x >= 0, the
/// normalization as a pair of opposite inequalities, and the extra rows
/// (equality rows also become inequality pairs).
SdpData lower_to_sdpa(const SemidefiniteProgram& program);

/// Conjugates every PSD block by a diagonal matrix of powers of two chosen
/// so that the largest coefficient magnitude on each diagonal entry is
/// within a small power of two of 1. Exact; the feasible set does not change.
void condition_blocks(SemidefiniteProgram& program);

/// Objective value of a point, and whether the point satisfies every
/// linear constraint exactly and every block up to a relative eigenvalue
/// tolerance.
Rational sdp_objective(const SemidefiniteProgram& program, const std::vector<Rational>& x);
bool sdp_point_feasible(const SemidefiniteProgram& program, const std::vector<Rational>& x, double tol = 1e-9);

}  // namespace subspace_bounds
