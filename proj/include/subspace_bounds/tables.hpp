#pragma once

#include "subspace_bounds/ipm.hpp"
#include "subspace_bounds/qcombinat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subspace_bounds {

/// One published row: E-V LP value (starred when the integer program is
/// one lower) and SDP value.
struct PublishedRow {
  int n;
  int d;
  Metric metric;
  long lp;
  bool starred;
  long sdp;
  /// Whether the source marks rows where the integer program gains one;
  /// when false the integer optimum is reported but not graded.
  bool ip_marked = false;
};

/// which = 1 (subspace distance) or 2 (injection distance).
const std::vector<PublishedRow>& published_table(int which);

struct TableRow {
  PublishedRow published;
  std::optional<long> lp;
  std::optional<long> ip;
  std::optional<long> sdp;
  std::string lp_exact;
  double sdp_value = 0;
  double sdp_gap = 0;
  std::string sdp_status;
  double lp_ms = 0;
  double ip_ms = 0;
  double sdp_ms = 0;

  bool lp_match() const;
  /// Integer program one below the LP exactly on starred rows, equal otherwise.
  bool ip_match() const;
  /// Exact, or within 1 when the published value exceeds 10^6.
  bool sdp_match() const;
};

struct TableOptions {
  int max_n = 16;
  bool lp = true;
  bool ip = true;
  bool sdp = true;
  IpmOptions ipm;
  /// Rows computed concurrently; <= 0 reads SUBSPACE_BOUNDS_THREADS, then
  /// falls back to the OpenMP default.
  int threads = 0;
};

TableRow compute_row(const PublishedRow& row, const TableOptions& options);
std::vector<TableRow> compute_table(int which, const TableOptions& options);

std::string format_table_text(int which, const std::vector<TableRow>& rows);
std::string format_table_csv(const std::vector<TableRow>& rows);
std::string format_table_json(int which, const std::vector<TableRow>& rows, bool include_timing = true);

/// Thread cap from SUBSPACE_BOUNDS_THREADS, or 0 when unset or invalid.
int env_thread_cap();

}  // namespace subspace_bounds
