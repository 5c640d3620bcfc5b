#include "subspace_bounds/tables.hpp"

#include "subspace_bounds/projective_lp.hpp"
#include "subspace_bounds/projective_sdp.hpp"

#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace subspace_bounds {

namespace {

// Published upper bounds for A_2(n, d), subspace distance. Columns: E-V
// LP (star: integer program one lower) and SDP.
const std::vector<PublishedRow> kTable1 = {
    {4, 3, Metric::subspace, 6, false, 6, true},
    {5, 3, Metric::subspace, 20, false, 20, true},
    {6, 3, Metric::subspace, 124, true, 124, true},
    {7, 3, Metric::subspace, 832, false, 776, true},
    {7, 5, Metric::subspace, 36, false, 35, true},
    {8, 3, Metric::subspace, 9365, false, 9268, true},
    {8, 5, Metric::subspace, 361, false, 360, true},
    {9, 3, Metric::subspace, 114387, true, 107419, true},
    {9, 5, Metric::subspace, 2531, true, 2485, true},
    {10, 3, Metric::subspace, 2543747, true, 2532929, true},
    {10, 5, Metric::subspace, 49451, true, 49394, true},
    {10, 7, Metric::subspace, 1224, true, 1223, true},
    {11, 5, Metric::subspace, 693240, false, 660285, true},
    {11, 7, Metric::subspace, 9120, false, 8990, true},
    {12, 7, Metric::subspace, 323475, false, 323374, true},
    {12, 9, Metric::subspace, 4488, true, 4487, true},
    {13, 7, Metric::subspace, 4781932, false, 4691980, true},
    {13, 9, Metric::subspace, 34591, true, 34306, true},
    {14, 9, Metric::subspace, 2334298, false, 2334086, true},
    {14, 11, Metric::subspace, 17160, true, 17159, true},
    {15, 11, Metric::subspace, 134687, true, 134095, true},
    {16, 13, Metric::subspace, 67080, true, 67079, true},
};

// Published upper bounds for A^inj_2(n, d), injection distance. Same columns.
const std::vector<PublishedRow> kTable2 = {
    {7, 3, Metric::injection, 37, false, 37},
    {8, 3, Metric::injection, 362, false, 364},
    {9, 3, Metric::injection, 2533, false, 2536},
    {10, 3, Metric::injection, 49586, false, 49588},
    {10, 4, Metric::injection, 1229, false, 1228},
    {11, 4, Metric::injection, 9124, false, 9126},
    {12, 4, Metric::injection, 323778, false, 323780},
    {12, 5, Metric::injection, 4492, false, 4492},
    {13, 5, Metric::injection, 34596, false, 34600},
    {14, 6, Metric::injection, 17167, false, 17164},
    {15, 6, Metric::injection, 134694, false, 134698},
    {16, 7, Metric::injection, 67087, false, 67084},
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

const std::vector<PublishedRow>& published_table(int which) {
  if (which == 1) return kTable1;
  if (which == 2) return kTable2;
  throw std::invalid_argument("table must be 1 or 2");
}

bool TableRow::lp_match() const { return lp && *lp == published.lp; }

bool TableRow::ip_match() const {
  if (!lp || !ip) return false;
  if (!published.ip_marked) return *ip <= *lp;
  return published.starred ? *ip == *lp - 1 : *ip == *lp;
}

bool TableRow::sdp_match() const {
  if (!sdp) return false;
  if (published.sdp > 1000000) return std::labs(*sdp - published.sdp) <= 1;
  return *sdp == published.sdp;
}

int env_thread_cap() {
  const char* env = std::getenv("SUBSPACE_BOUNDS_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 0;
  return static_cast<int>(v);
}

TableRow compute_row(const PublishedRow& row, const TableOptions& options) {
  TableRow out;
  out.published = row;
  const ProjectiveParams p{row.n, row.d, FieldOrder(2), row.metric};
  if (options.lp || options.ip) {
    const auto model = ev_model(p);
    if (options.lp) {
      const auto start = std::chrono::steady_clock::now();
      const auto res = solve_ev(model, {}, EvMode::real);
      out.lp = res.floored.get_si();
      out.lp_exact = to_string(res.value);
      out.lp_ms = ms_since(start);
    }
    if (options.ip) {
      const auto start = std::chrono::steady_clock::now();
      out.ip = solve_ev(model, {}, EvMode::integer).floored.get_si();
      out.ip_ms = ms_since(start);
    }
  }
  if (options.sdp) {
    IpmOptions ipm = options.ipm;
    ipm.threads = 1;
    const auto rep = solve_sdp(sdp_model(p), ipm);
    if (rep.floored) out.sdp = rep.floored->get_si();
    out.sdp_value = rep.value;
    out.sdp_gap = rep.gap;
    out.sdp_status = std::string(status_name(rep.status));
    out.sdp_ms = rep.wall_ms;
  }
  return out;
}

std::vector<TableRow> compute_table(int which, const TableOptions& options) {
  std::vector<PublishedRow> rows;
  for (const auto& r : published_table(which))
    if (r.n <= options.max_n) rows.push_back(r);
  std::vector<TableRow> out(rows.size());
  int threads = options.threads > 0 ? options.threads : env_thread_cap();
  if (threads <= 0) threads = omp_get_max_threads();
  std::vector<std::string> errors(rows.size());
  // largest rows first so the tail of the schedule is short
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int idx = static_cast<int>(rows.size()) - 1; idx >= 0; --idx) {
    try {
      out[idx] = compute_row(rows[idx], options);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) throw std::runtime_error("row " + std::to_string(i) + ": " + errors[i]);
  return out;
}

std::string format_table_text(int which, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << (which == 1 ? "Upper bounds for A_2(n,d), subspace distance\n"
                     : "Upper bounds for A^inj_2(n,d), injection distance\n");
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-4s %10s %10s %10s %6s %10s %10s %6s\n", "n", "d", "LP-pub", "LP", "IP",
                "match", "SDP-pub", "SDP", "match");
  out << line;
  for (const auto& r : rows) {
    const std::string pub_lp = (r.published.starred ? "*" : "") + std::to_string(r.published.lp);
    const bool lp_ok = r.lp_match() && (!r.ip || r.ip_match());
    std::snprintf(line, sizeof line, "%-4d %-4d %10s %10s %10s %6s %10ld %10s %6s\n", r.published.n, r.published.d,
                  pub_lp.c_str(), opt_str(r.lp).c_str(), opt_str(r.ip).c_str(), r.lp ? (lp_ok ? "yes" : "NO") : "-",
                  r.published.sdp, opt_str(r.sdp).c_str(),
                  r.sdp_status.empty() ? "-" : (r.sdp_match() ? "yes" : "NO"));
    out << line;
  }
  return out.str();
}

std::string format_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,d,metric,published_lp,starred,lp,lp_exact,ip,lp_match,published_sdp,sdp,sdp_value,sdp_status,sdp_match\n";
  for (const auto& r : rows) {
    char value[64];
    std::snprintf(value, sizeof value, "%.12f", r.sdp_value);
    out << r.published.n << "," << r.published.d << "," << metric_name(r.published.metric) << "," << r.published.lp
        << "," << (r.published.starred ? 1 : 0) << "," << opt_str(r.lp) << "," << r.lp_exact << "," << opt_str(r.ip)
        << "," << (r.lp_match() ? 1 : 0) << "," << r.published.sdp << "," << opt_str(r.sdp) << ","
        << (r.sdp_status.empty() ? "" : value) << "," << r.sdp_status << "," << (r.sdp_match() ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string format_table_json(int which, const std::vector<TableRow>& rows, bool include_timing) {
  nlohmann::ordered_json j;
  j["table"] = which;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.published.n;
    row["d"] = r.published.d;
    row["metric"] = std::string(metric_name(r.published.metric));
    row["published"] = {{"lp", r.published.lp}, {"starred", r.published.starred}, {"sdp", r.published.sdp}};
    nlohmann::ordered_json computed;
    computed["lp"] = r.lp ? nlohmann::ordered_json(*r.lp) : nullptr;
    computed["lp_exact"] = r.lp_exact;
    computed["ip"] = r.ip ? nlohmann::ordered_json(*r.ip) : nullptr;
    computed["sdp"] = r.sdp ? nlohmann::ordered_json(*r.sdp) : nullptr;
    char value[64];
    std::snprintf(value, sizeof value, "%.12f", r.sdp_value);
    computed["sdp_value"] = r.sdp_status.empty() ? "" : value;
    computed["sdp_status"] = r.sdp_status;
    row["computed"] = computed;
    row["match"] = {{"lp", r.lp_match()}, {"ip", r.ip_match()}, {"sdp", r.sdp_match()}};
    if (include_timing) row["ms"] = {{"lp", r.lp_ms}, {"ip", r.ip_ms}, {"sdp", r.sdp_ms}};
    j["rows"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace subspace_bounds
