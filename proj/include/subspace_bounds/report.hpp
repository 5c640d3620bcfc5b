#pragma once

#include "subspace_bounds/qcombinat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subspace_bounds {

/// Result of one bound computation, serialized by the CLI as JSON.
struct BoundReport {
  int q = 2;
  int n = 0;
  std::optional<int> k;
  int d = 0;
  std::optional<Metric> metric;
  std::string method;
  /// Exact value as "p/q" when the method is exact.
  std::string raw_exact;
  double raw_value = 0;
  std::optional<BigInt> floored;
  std::string status;
  double gap = 0;
  std::vector<std::string> cuts_applied;
  double wall_ms = 0;
  int iterations = 0;
};

/// JSON text (two-space indent, keys in a fixed order). With
/// include_timing false the wall_ms field is written as 0 so that
/// output is byte-for-byte reproducible.
std::string report_json(const BoundReport& report, bool include_timing = true);
std::string reports_json(const std::vector<BoundReport>& reports, bool include_timing = true);

/// Decimal rendering used for raw_value; never below the floored bound.
std::string decimal_string(double value);

}  // namespace subspace_bounds
