#include "subspace_bounds/lp_text.hpp"
#include "subspace_bounds/simplex.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

using namespace subspace_bounds;

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

LinearProgram box_lp() {
  LinearProgram lp;
  lp.add_variable("x1", 1);
  lp.add_variable("x2", 1);
  lp.add_row("cap", 0, {1, 0}, RowSense::less_equal, 3);
  lp.add_row("cap", 1, {0, 1}, RowSense::less_equal, 4);
  return lp;
}

}  // namespace

TEST_CASE("box LP with duals") {
  const auto sol = simplex_solve(box_lp());
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == 7);
  CHECK(sol.dual == std::vector<Rational>{1, 1});
  CHECK_FALSE(certificate_violation(box_lp(), sol).has_value());
}

TEST_CASE("infeasible and unbounded are distinct") {
  LinearProgram lp;
  lp.add_variable("x", 1);
  lp.add_row("lo", 0, {1}, RowSense::greater_equal, 2);
  lp.add_row("hi", 0, {1}, RowSense::less_equal, 1);
  CHECK(simplex_solve(lp).status == LpStatus::infeasible);
  LinearProgram u;
  u.add_variable("x", 1);
  u.add_variable("y", 0);
  u.add_row("r", 0, {1, -1}, RowSense::less_equal, 1);
  CHECK(simplex_solve(u).status == LpStatus::unbounded);
}

TEST_CASE("equality and minimize") {
  LinearProgram lp;
  lp.direction = Direction::minimize;
  lp.add_variable("x", 2);
  lp.add_variable("y", 3);
  lp.add_row("sum", 0, {1, 1}, RowSense::equal, 5);
  lp.add_row("x", 0, {1, 0}, RowSense::less_equal, 2);
  const auto sol = simplex_solve(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == 13);
  CHECK_FALSE(certificate_violation(lp, sol).has_value());
}

TEST_CASE("random LPs: exact certificates and float agreement") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(0, 9), rhs(5, 40), sgn(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    LinearProgram lp;
    const int nv = 2 + trial % 5, nr = 2 + trial % 4;
    for (int j = 0; j < nv; ++j) lp.add_variable("x" + std::to_string(j), frac(coef(rng) - 2, 1 + coef(rng)));
    for (int r = 0; r < nr; ++r) {
      std::vector<Rational> row;
      for (int j = 0; j < nv; ++j) row.push_back(frac(coef(rng) * (sgn(rng) == 0 ? -1 : 1), 1 + coef(rng) % 3));
      lp.add_row("r", r, row, r % 3 == 2 ? RowSense::greater_equal : RowSense::less_equal, rhs(rng) / (r % 3 == 2 ? 8 : 1));
    }
    for (int j = 0; j < nv; ++j) {
      std::vector<Rational> row(nv, 0);
      row[j] = 1;
      lp.add_row("bound", j, row, RowSense::less_equal, 50);
    }
    const auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal) {
      CHECK(sol.status == LpStatus::infeasible);
      continue;
    }
    CHECK_FALSE(certificate_violation(lp, sol).has_value());
    const auto fl = simplex_solve_float(lp);
    REQUIRE(fl.status == LpStatus::optimal);
    CHECK(fl.objective == doctest::Approx(to_double(sol.objective)).epsilon(1e-9));
  }
}

TEST_CASE("branch and bound") {
  LinearProgram lp;
  lp.add_variable("x", 1, true);
  lp.add_variable("y", 1, true);
  lp.add_row("r", 0, {2, 2}, RowSense::less_equal, 3);
  const auto relax = simplex_solve(lp);
  CHECK(relax.objective == Rational(3, 2));
  const auto ip = branch_and_bound(lp);
  REQUIRE(ip.status == LpStatus::optimal);
  CHECK(ip.objective == 1);
  for (const auto& v : ip.primal) CHECK(v.get_den() == 1);
  CHECK(branch_and_bound(box_lp()).objective == 7);
}

TEST_CASE("knapsack branch and bound against enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> w(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    LinearProgram lp;
    std::vector<int> value(4), weight(4);
    for (int j = 0; j < 4; ++j) {
      value[j] = w(rng);
      weight[j] = w(rng);
      lp.add_variable("x" + std::to_string(j), value[j], true);
    }
    for (int j = 0; j < 4; ++j) {
      std::vector<Rational> row(4, 0);
      row[j] = 1;
      lp.add_row("ub", j, row, RowSense::less_equal, 3);
    }
    const int cap = 10 + trial;
    lp.add_row("w", 0, {weight[0], weight[1], weight[2], weight[3]}, RowSense::less_equal, cap);
    int best = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          for (int d = 0; d <= 3; ++d)
            if (a * weight[0] + b * weight[1] + c * weight[2] + d * weight[3] <= cap)
              best = std::max(best, a * value[0] + b * value[1] + c * value[2] + d * value[3]);
    CHECK(branch_and_bound(lp).objective == best);
  }
}

TEST_CASE("lp text round trip") {
  auto lp = box_lp();
  lp.integer[1] = true;
  lp.add_row("mix", 0, {frac(-1, 3), frac(22, 7)}, RowSense::greater_equal, frac(-5, 2));
  lp.add_row("eq", 0, {1, 1}, RowSense::equal, 6);
  const std::string text = export_lp_text(lp);
  // rows come back sorted by tag, then index
  auto sorted = lp;
  std::stable_sort(sorted.rows.begin(), sorted.rows.end(), [](const LinearRow& a, const LinearRow& b) {
    return std::tie(a.tag, a.index) < std::tie(b.tag, b.index);
  });
  CHECK(parse_lp_text(text) == sorted);
  CHECK(export_lp_text(parse_lp_text(text)) == text);
  CHECK(simplex_solve(parse_lp_text(text)).objective == simplex_solve(lp).objective);

  LinearProgram empty;
  const auto header = export_lp_text(empty);
  CHECK(parse_lp_text(header) == empty);
  CHECK_THROWS(parse_lp_text("garbage\n"));
}
