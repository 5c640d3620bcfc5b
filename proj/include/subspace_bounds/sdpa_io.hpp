#pragma once

#include "subspace_bounds/sdp_data.hpp"

#include <string>
#include <string_view>

namespace subspace_bounds {

/// SDPA sparse (.dat-s) text. Line 1 holds m, line 2 the block count,
/// line 3 the block sizes, line 4 the objective vector, then one line
/// "matno block i j value" per nonzero upper-triangle entry (1-based
/// block and indices, matno 0 for F_0). Values are printed as the nearest
/// double with 17 significant digits.
std::string export_sdpa(const SdpData& data);

/// Reads .dat-s text; decimal values are converted exactly. Comment lines
/// (starting with '"' or '*') before the header are skipped, and the usual
/// separators ",(){}" are treated as whitespace.
SdpData parse_sdpa(std::string_view text);

}  // namespace subspace_bounds
