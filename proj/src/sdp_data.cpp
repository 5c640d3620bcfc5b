#include "subspace_bounds/sdp_data.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subspace_bounds {

void add_term(LinearForm& form, int variable, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = std::lower_bound(form.begin(), form.end(), variable,
                             [](const auto& term, int v) { return term.first < v; });
  if (it != form.end() && it->first == variable) {
    it->second += coeff;
    if (sgn(it->second) == 0) form.erase(it);
  } else {
    form.insert(it, {variable, coeff});
  }
}

SdpBlock::SdpBlock(std::string label_, int size_)
    : label(std::move(label_)), size(size_), upper(static_cast<std::size_t>(size_) * (size_ + 1) / 2) {}

namespace {
std::size_t upper_index(int size, int row, int col) {
  if (row > col) std::swap(row, col);
  if (row < 0 || col >= size) throw std::out_of_range("SdpBlock index");
  // rows 0..row-1 hold size, size-1, ... entries
  return static_cast<std::size_t>(row) * size - static_cast<std::size_t>(row) * (row - 1) / 2 + (col - row);
}
}  // namespace

LinearForm& SdpBlock::at(int row, int col) { return upper[upper_index(size, row, col)]; }
const LinearForm& SdpBlock::at(int row, int col) const { return upper[upper_index(size, row, col)]; }

int SemidefiniteProgram::add_variable(std::string name, Rational objective_coeff) {
  variable_names.push_back(std::move(name));
  objective.push_back(std::move(objective_coeff));
  normalization.emplace_back(0);
  for (auto& row : rows) row.coeffs.emplace_back(0);
  return num_variables() - 1;
}

SdpData lower_to_sdpa(const SemidefiniteProgram& program) {
  const int m = program.num_variables();
  SdpData data;
  data.c.reserve(m);
  for (const auto& v : program.objective) data.c.push_back(-v);
  data.matrices.assign(m + 1, {});

  int b = 0;
  for (const auto& block : program.blocks) {
    data.block_sizes.push_back(block.size);
    for (int r = 0; r < block.size; ++r)
      for (int c = r; c < block.size; ++c)
        for (const auto& [var, coeff] : block.at(r, c)) data.matrices[var + 1].push_back({b, r, c, coeff});
    ++b;
  }

  int diag = 0;
  auto add_diag_row = [&](const std::vector<Rational>& coeffs, const Rational& constant, int sign) {
    // sign * (coeffs . x - constant) >= 0
    for (int j = 0; j < m; ++j)
      if (sgn(coeffs[j]) != 0) data.matrices[j + 1].push_back({b, diag, diag, sign * coeffs[j]});
    if (sgn(constant) != 0) data.matrices[0].push_back({b, diag, diag, sign * constant});
    ++diag;
  };
  for (int j = 0; j < m; ++j, ++diag) data.matrices[j + 1].push_back({b, diag, diag, Rational(1)});
  add_diag_row(program.normalization, Rational(1), 1);
  add_diag_row(program.normalization, Rational(1), -1);
  for (const auto& row : program.rows) {
    if (row.sense != RowSense::greater_equal) add_diag_row(row.coeffs, row.rhs, -1);
    if (row.sense != RowSense::less_equal) add_diag_row(row.coeffs, row.rhs, 1);
  }
  data.block_sizes.push_back(-diag);
  return data;
}

void condition_blocks(SemidefiniteProgram& program) {
  for (auto& block : program.blocks) {
    std::vector<long> shift(block.size, 0);
    for (int r = 0; r < block.size; ++r) {
      Rational largest = 0;
      for (const auto& [var, coeff] : block.at(r, r)) largest = std::max(largest, Rational(abs(coeff)));
      if (sgn(largest) == 0) continue;
      // approximate log2 from the bit lengths of numerator and denominator
      const long num_bits = static_cast<long>(mpz_sizeinbase(largest.get_num_mpz_t(), 2));
      const long den_bits = static_cast<long>(mpz_sizeinbase(largest.get_den_mpz_t(), 2));
      shift[r] = -(num_bits - den_bits) / 2;
    }
    for (int r = 0; r < block.size; ++r)
      for (int c = r; c < block.size; ++c) {
        const Rational scale = power(2, static_cast<int>(shift[r] + shift[c]));
        for (auto& term : block.at(r, c)) term.second *= scale;
      }
  }
}

Rational sdp_objective(const SemidefiniteProgram& program, const std::vector<Rational>& x) {
  Rational value = 0;
  for (int j = 0; j < program.num_variables(); ++j) value += program.objective[j] * x[j];
  return value;
}

bool sdp_point_feasible(const SemidefiniteProgram& program, const std::vector<Rational>& x, double tol) {
  const int m = program.num_variables();
  if (static_cast<int>(x.size()) != m) return false;
  Rational norm = 0;
  for (int j = 0; j < m; ++j) {
    if (sgn(x[j]) < 0) return false;
    norm += program.normalization[j] * x[j];
  }
  if (norm != 1) return false;
  for (const auto& row : program.rows) {
    Rational lhs = 0;
    for (int j = 0; j < m; ++j) lhs += row.coeffs[j] * x[j];
    if (row.sense == RowSense::less_equal && lhs > row.rhs) return false;
    if (row.sense == RowSense::greater_equal && lhs < row.rhs) return false;
    if (row.sense == RowSense::equal && lhs != row.rhs) return false;
  }
  for (const auto& block : program.blocks) {
    Eigen::MatrixXd mat(block.size, block.size);
    for (int r = 0; r < block.size; ++r)
      for (int c = r; c < block.size; ++c) {
        Rational v = 0;
        for (const auto& [var, coeff] : block.at(r, c)) v += coeff * x[var];
        mat(r, c) = mat(c, r) = to_double(v);
      }
    if (block.size == 0) continue;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mat, Eigen::EigenvaluesOnly);
    const double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (eig.eigenvalues().minCoeff() < -tol * scale) return false;
  }
  return true;
}

}  // namespace subspace_bounds
