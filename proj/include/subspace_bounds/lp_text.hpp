#pragma once

#include "subspace_bounds/linear_program.hpp"

#include <string>
#include <string_view>

namespace subspace_bounds {

// Human-auditable LP listing:
//
//   # subspace-bounds linear program
//   maximize
//   variables
//     x_0 1 integer
//     x_1 1
//   rows
//     dimension_cap[0]: +1 x_0 <= 1
//     packing[1]: +15 x_0 +7/2 x_1 <= 15
//   end
//
// Coefficients are exact rationals; zero coefficients are omitted. Rows are
// listed by provenance tag (dimension_cap, packing, theorem51_single,
// theorem51_pair, complement_pair, then any other tag alphabetically) and
// by index within a tag.
std::string export_lp_text(const LinearProgram& lp);

/// Inverse of export_lp_text; throws std::runtime_error on malformed input.
LinearProgram parse_lp_text(std::string_view text);

}  // namespace subspace_bounds
