#include "subspace_bounds/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace subspace_bounds {

std::string decimal_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

nlohmann::ordered_json to_json(const BoundReport& r, bool include_timing) {
  nlohmann::ordered_json params;
  params["q"] = r.q;
  params["n"] = r.n;
  if (r.k) params["k"] = *r.k;
  params["d"] = r.d;
  if (r.metric) params["metric"] = std::string(metric_name(*r.metric));

  nlohmann::ordered_json j;
  j["params"] = params;
  j["method"] = r.method;
  j["raw_value"] = decimal_string(r.raw_value);
  if (!r.raw_exact.empty()) j["raw_exact"] = r.raw_exact;
  if (r.floored)
    j["floored_bound"] = nlohmann::ordered_json::parse(to_string(*r.floored));
  else
    j["floored_bound"] = nullptr;
  j["status"] = r.status;
  j["gap"] = r.gap;
  j["iterations"] = r.iterations;
  j["cuts_applied"] = r.cuts_applied;
  j["wall_ms"] = include_timing ? r.wall_ms : 0.0;
  return j;
}

}  // namespace

std::string report_json(const BoundReport& report, bool include_timing) {
  return to_json(report, include_timing).dump(2);
}

std::string reports_json(const std::vector<BoundReport>& reports, bool include_timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
  return arr.dump(2);
}

}  // namespace subspace_bounds
