#include "subspace_bounds/oracle.hpp"
#include "subspace_bounds/projective_sdp.hpp"
#include "subspace_bounds/qhahn.hpp"
#include "subspace_bounds/sdpa_io.hpp"
#include "subspace_bounds/simplex.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace subspace_bounds;

namespace {

ProjectiveParams pp(int n, int d, Metric m = Metric::subspace) { return {n, d, FieldOrder(2), m}; }

}  // namespace

TEST_CASE("omega") {
  const auto all = omega(2, 1, Metric::subspace);
  int realizable = 0;
  for (int s = 0; s <= 2; ++s)
    for (int t = s; t <= 2; ++t) realizable += s - std::max(0, s + t - 2) + 1;
  CHECK(static_cast<int>(all.size()) == realizable);
  const auto o = omega(4, 3, Metric::subspace);
  CHECK(std::binary_search(o.begin(), o.end(), TripleIndex{1, 2, 0}));
  CHECK_FALSE(std::binary_search(o.begin(), o.end(), TripleIndex{1, 2, 1}));
  CHECK(std::is_sorted(o.begin(), o.end()));
  const auto inj = omega(4, 2, Metric::injection);
  CHECK(std::binary_search(inj.begin(), inj.end(), TripleIndex{1, 3, 1}));
  CHECK_FALSE(std::binary_search(inj.begin(), inj.end(), TripleIndex{2, 3, 2}));
}

TEST_CASE("every pair of a real code lies in omega") {
  for (auto metric : {Metric::subspace, Metric::injection})
    for (int d = 1; d <= 4; ++d) {
      const auto code = oracle::max_code_exact(4, d, metric);
      const auto spaces = oracle::enumerate_projective(4);
      const auto o = omega(4, d, metric);
      for (int a : code.code)
        for (int b : code.code) {
          auto x = spaces[a], y = spaces[b];
          if (x.dim > y.dim) std::swap(x, y);
          CHECK(std::binary_search(o.begin(), o.end(), TripleIndex{x.dim, y.dim, oracle::intersection_dim(x, y)}));
        }
    }
}

TEST_CASE("F_k coefficients") {
  const FieldOrder q(2);
  for (int s = 0; s <= 5; ++s)
    for (int t = s; t <= 5; ++t)
      for (int i = std::max(0, s + t - 5); i <= s; ++i)
        CHECK(fk_entry_coeff(0, s, t, i, 5, q) == Rational(1) / Rational(qbinom(5, s, q) * qbinom(5, t, q)));
  for (int k = 0; 2 * k <= 6; ++k)
    CHECK(fk_entry_coeff(k, k, k, k, 6, q) ==
          Rational(1) / Rational(qbinom(6, k, q) * qbinom(6 - 2 * k, 0, q)) * power(2, 0));
  const Rational c = fk_entry_coeff(1, 2, 2, 0, 4, q);
  CHECK(c < 0);
  CHECK(c / hahn_value(1, 4, 2, 2, 2, q) > 0);
  CHECK_THROWS(fk_entry_coeff(2, 1, 2, 0, 4, q));
  CHECK_THROWS(fk_entry_coeff(1, 2, 4, 0, 4, q));
}

TEST_CASE("model shape") {
  const auto m = sdp_model(pp(8, 3));
  CHECK(m.program.blocks.size() == 5);
  for (std::size_t k = 0; k < m.program.blocks.size(); ++k)
    CHECK(m.program.blocks[k].size == 8 - 2 * static_cast<int>(k) + 1);
  CHECK(m.cut_tags.size() == 9);
  const auto data = lower_to_sdpa(m.program);
  CHECK(data.block_sizes.size() == 8 / 2 + 2);
  CHECK(data.block_sizes.back() < 0);
  CHECK(sdp_model(pp(8, 3), {.dimension_cuts = false}).cut_tags.empty());
}

TEST_CASE("code point is feasible and attains the code size") {
  const auto spaces = oracle::enumerate_projective(4);
  for (auto metric : {Metric::subspace, Metric::injection})
    for (int d = 1; d <= 4; ++d) {
      const auto code = oracle::max_code_exact(4, d, metric);
      std::vector<TripleIndex> types;
      for (int a : code.code)
        for (int b : code.code) {
          const auto& x = spaces[a];
          const auto& y = spaces[b];
          types.push_back({x.dim, y.dim, oracle::intersection_dim(x, y)});
        }
      for (bool condition : {false, true}) {
        const auto model = sdp_model(pp(4, d, metric), {.condition = condition});
        const auto x = code_point(model.triples, types, code.size);
        CHECK(sdp_point_feasible(model.program, x));
        CHECK(sdp_objective(model.program, x) == code.size);
      }
    }
}

TEST_CASE("solve reduced SDP for (4,3) and the degenerate n = 0 model") {
  const auto rep = solve_sdp(sdp_model(pp(4, 3)));
  REQUIRE(rep.status == IpmStatus::optimal);
  CHECK(rep.value >= 6.0);
  CHECK(rep.value <= 6.999);
  CHECK(rep.floored == 6);
  CHECK(rep.value <= rep.dual_value + rep.gap + 1e-9);
  const auto zero = solve_sdp(sdp_model({0, 1, FieldOrder(2)}));
  REQUIRE(zero.status == IpmStatus::optimal);
  CHECK(zero.value == doctest::Approx(1.0));
}

TEST_CASE("diagonal-only optimum is one") {
  auto model = sdp_model(pp(6, 3));
  for (std::size_t j = 0; j < model.triples.size(); ++j) {
    const auto& tau = model.triples[j];
    if (tau.s == tau.t && tau.t == tau.i) continue;
    std::vector<Rational> row(model.triples.size(), 0);
    row[j] = 1;
    model.program.rows.push_back({"zero", static_cast<int>(j), row, RowSense::less_equal, 0});
  }
  const auto rep = solve_sdp(model);
  REQUIRE(rep.status == IpmStatus::optimal);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("positive diagonal congruence leaves the optimum unchanged") {
  const auto plain = solve_sdp(sdp_model(pp(6, 3), {.condition = false}));
  const auto cond = solve_sdp(sdp_model(pp(6, 3), {.condition = true}));
  auto scaled_model = sdp_model(pp(6, 3), {.condition = false});
  for (auto& block : scaled_model.program.blocks)
    for (int r = 0; r < block.size; ++r)
      for (int c = r; c < block.size; ++c)
        for (auto& [var, coeff] : block.at(r, c)) coeff *= Rational(r + 2) * Rational(c + 2) * 5;
  const auto scaled = solve_sdp(scaled_model);
  REQUIRE(plain.status == IpmStatus::optimal);
  REQUIRE(cond.status == IpmStatus::optimal);
  REQUIRE(scaled.status == IpmStatus::optimal);
  CHECK(cond.value == doctest::Approx(plain.value).epsilon(1e-7));
  CHECK(scaled.value == doctest::Approx(plain.value).epsilon(1e-7));
}

TEST_CASE("monotone in d") {
  for (auto metric : {Metric::subspace, Metric::injection})
    for (int n : {5, 7}) {
      double prev = 1e300;
      for (int d = 1; d <= n; ++d) {
        const auto rep = solve_sdp(sdp_model(pp(n, d, metric)));
        REQUIRE(rep.status == IpmStatus::optimal);
        CHECK(rep.value <= prev + 1e-6 * prev);
        prev = rep.value;
      }
    }
}

TEST_CASE("SDPA round trip") {
  for (const auto& p : {pp(2, 1), pp(5, 3), pp(6, 2, Metric::injection)}) {
    const auto data = lower_to_sdpa(sdp_model(p, {.theorem51_cuts = true}).program);
    const auto text = export_sdpa(data);
    const auto back = parse_sdpa(text);
    CHECK(back.block_sizes == data.block_sizes);
    CHECK(back.c.size() == data.c.size());
    CHECK(export_sdpa(back) == text);
    const auto a = ipm_solve(data), b = ipm_solve(back);
    REQUIRE(a.status == IpmStatus::optimal);
    REQUIRE(b.status == IpmStatus::optimal);
    CHECK(std::abs(a.primal_value - b.primal_value) <= 1e-8 * std::max(1.0, std::abs(a.primal_value)));
  }
}

TEST_CASE("SDPA parser accepts comments and punctuation, rejects junk") {
  const std::string text =
      "\"a comment\n* another\n2\n2\n{2, -1}\n(-1, -1)\n0 1 1 1 1\n1 1 1 1 1.0\n2 1 2 2 1\n1 2 1 1 1\n";
  const auto data = parse_sdpa(text);
  CHECK(data.block_sizes == std::vector<int>{2, -1});
  CHECK(data.c == std::vector<Rational>{-1, -1});
  CHECK_THROWS(parse_sdpa("2\n1\n2\n-1\n"));
  CHECK_THROWS(parse_sdpa("1\n1\n2\n-1\n1 2 1 1 1\n"));
  CHECK_THROWS(parse_sdpa("1\n1\n2\n-1\n1 1 3 1 1\n"));
}

TEST_CASE("diagonal SDP agrees with exact simplex") {
  // max x + 2y s.t. x + y <= 4, x <= 3, y <= 2 as an all-diagonal SDP
  SdpData data;
  data.block_sizes = {-5};
  data.c = {-1, -2};
  data.matrices.resize(3);
  data.matrices[0] = {{0, 0, 0, -4}, {0, 1, 1, -3}, {0, 2, 2, -2}};
  data.matrices[1] = {{0, 0, 0, -1}, {0, 1, 1, -1}, {0, 3, 3, 1}};
  data.matrices[2] = {{0, 0, 0, -1}, {0, 2, 2, -1}, {0, 4, 4, 1}};
  LinearProgram lp;
  lp.add_variable("x", 1);
  lp.add_variable("y", 2);
  lp.add_row("a", 0, {1, 1}, RowSense::less_equal, 4);
  lp.add_row("b", 0, {1, 0}, RowSense::less_equal, 3);
  lp.add_row("c", 0, {0, 1}, RowSense::less_equal, 2);
  const double exact = to_double(simplex_solve(lp).objective);
  for (auto precision : {IpmPrecision::double_precision, IpmPrecision::quad_precision}) {
    IpmOptions o;
    o.precision = precision;
    const auto res = ipm_solve(data, o);
    REQUIRE(res.status == IpmStatus::optimal);
    CHECK(std::abs(res.primal_value - exact) <= 1e-8 * exact);
  }
}

TEST_CASE("presolve eliminates the normalization and flags violated constants") {
  const auto data = lower_to_sdpa(sdp_model(pp(5, 3)).program);
  const auto pre = presolve_sdp(data);
  CHECK(pre.eliminated == 1);
  CHECK(pre.data.num_variables() == data.num_variables() - 1);

  SdpData bad;
  bad.block_sizes = {-2};
  bad.c = {-1};
  bad.matrices.resize(2);
  bad.matrices[0] = {{0, 0, 0, 1}};
  bad.matrices[1] = {{0, 1, 1, 1}};
  const auto res = ipm_solve(bad);
  CHECK(res.status == IpmStatus::infeasible);
  CHECK_FALSE(res.message.empty());
}

TEST_CASE("lovasz theta of the 5-cycle") {
  std::vector<std::vector<bool>> c5(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) c5[i][(i + 1) % 5] = c5[(i + 1) % 5][i] = true;
  const auto res = oracle::theta_prime(c5);
  REQUIRE(res.status == IpmStatus::optimal);
  CHECK(res.primal_value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
}
