#pragma once

#include "subspace_bounds/exact.hpp"

#include <string>
#include <vector>

namespace subspace_bounds {

enum class RowSense { less_equal, equal, greater_equal };
enum class Direction { maximize, minimize };

std::string_view sense_symbol(RowSense sense);

/// One linear constraint coeffs . x (sense) rhs. Rows carry a provenance
/// tag ("dimension_cap", "packing", ...) and an index within that tag.
struct LinearRow {
  std::string tag;
  int index = 0;
  std::vector<Rational> coeffs;
  RowSense sense = RowSense::less_equal;
  Rational rhs;

  std::string name() const { return tag + "[" + std::to_string(index) + "]"; }
  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/// Linear program over nonnegative variables with exact coefficients.
struct LinearProgram {
  Direction direction = Direction::maximize;
  std::vector<std::string> variable_names;
  std::vector<Rational> objective;
  std::vector<bool> integer;
  std::vector<LinearRow> rows;

  int num_variables() const { return static_cast<int>(variable_names.size()); }
  int add_variable(std::string name, Rational objective_coeff, bool is_integer = false);
  LinearRow& add_row(std::string tag, int index, std::vector<Rational> coeffs, RowSense sense, Rational rhs);

  friend bool operator==(const LinearProgram&, const LinearProgram&) = default;
};

}  // namespace subspace_bounds
