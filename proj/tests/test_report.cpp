#include "subspace_bounds/report.hpp"
#include "subspace_bounds/tables.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace subspace_bounds;

TEST_CASE("report JSON schema") {
  BoundReport r;
  r.n = 7;
  r.d = 5;
  r.metric = Metric::subspace;
  r.method = "ev-lp";
  r.raw_exact = "4478/131";
  r.raw_value = 4478.0 / 131.0;
  r.floored = BigInt(34);
  r.status = "optimal";
  r.cuts_applied = {"packing", "theorem51_single[5]"};
  r.wall_ms = 12.5;
  const auto j = nlohmann::json::parse(report_json(r, false));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(j["params"]["q"] == 2);
  CHECK(j["params"]["metric"] == "subspace");
  CHECK_FALSE(j["params"].contains("k"));
  CHECK(j["floored_bound"] == 34);
  CHECK(j["wall_ms"] == 0.0);
  CHECK(std::stod(j["raw_value"].get<std::string>()) >= 34);
  CHECK(nlohmann::json::parse(report_json(r, true))["wall_ms"] == 12.5);
  const auto ordered = nlohmann::ordered_json::parse(report_json(r, false));
  std::vector<std::string> order;
  for (auto it = ordered.begin(); it != ordered.end(); ++it) order.push_back(it.key());
  CHECK(order == std::vector<std::string>{"params", "method", "raw_value", "raw_exact", "floored_bound", "status", "gap",
                                          "iterations", "cuts_applied", "wall_ms"});
  r.floored.reset();
  CHECK(nlohmann::json::parse(report_json(r, false))["floored_bound"].is_null());
  CHECK(report_json(r, false) == report_json(r, false));
}

TEST_CASE("decimal strings round trip") {
  for (double v : {0.0, 1.0, 6.2, 9268.449826511, 2543747.0, 1e-9})
    CHECK(std::stod(decimal_string(v)) == v);
}

TEST_CASE("table LP rows, JSON and CSV formats") {
  TableOptions o;
  o.max_n = 8;
  o.sdp = false;
  const auto rows = compute_table(1, o);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(r.lp_match());
    CHECK(r.ip_match());
    CHECK(r.published.n <= 8);
  }
  const auto j = nlohmann::json::parse(format_table_json(1, rows, false));
  CHECK(j["rows"].size() == 7);
  CHECK(j["rows"][0]["computed"]["lp"] == 6);
  CHECK_FALSE(j["rows"][0].contains("ms"));
  CHECK(format_table_json(1, rows, false) == format_table_json(1, compute_table(1, o), false));
  const auto csv = format_table_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK(format_table_text(1, rows).find("NO") == std::string::npos);
  CHECK_THROWS(published_table(3));
}

TEST_CASE("thread cap from the environment") {
  setenv("SUBSPACE_BOUNDS_THREADS", "3", 1);
  CHECK(env_thread_cap() == 3);
  setenv("SUBSPACE_BOUNDS_THREADS", "zero", 1);
  CHECK(env_thread_cap() == 0);
  unsetenv("SUBSPACE_BOUNDS_THREADS");
  CHECK(env_thread_cap() == 0);
}
