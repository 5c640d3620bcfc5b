#include "subspace_bounds/grassmann.hpp"
#include "subspace_bounds/simplex.hpp"

#include <doctest.h>

using namespace subspace_bounds;

namespace {
GrassmannParams gp(int n, int k, int delta, int q = 2) { return {n, k, delta, FieldOrder(q)}; }
}  // namespace

TEST_CASE("sphere packing") {
  CHECK(sphere_packing_bound(gp(4, 2, 1)) == 35);
  CHECK(sphere_packing_bound(gp(4, 2, 2)) == 35);
  // qbinom(6,3) / (1 + qbinom(3,1)^2 * 2) = 1395 / 99
  CHECK(sphere_packing_bound(gp(6, 3, 3)) == Rational(155, 11));
}

TEST_CASE("singleton") {
  CHECK(singleton_bound(gp(4, 2, 2)) == 7);
  CHECK(singleton_bound(gp(6, 2, 1)) == qbinom(6, 2, FieldOrder(2)));
}

TEST_CASE("anticode") {
  CHECK(anticode_bound(gp(4, 2, 2)) == 5);
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      CHECK(anticode_bound(gp(n, k, k)) == Rational(power_int(2, n) - 1) / Rational(power_int(2, k) - 1));
}

TEST_CASE("johnson1") {
  CHECK(johnson1_bound(gp(4, 2, 2)) == BigInt(5));
  CHECK(johnson1_bound(gp(6, 2, 2)) == BigInt(21));
  CHECK_FALSE(johnson1_bound(gp(8, 2, 1)).has_value());
  CHECK_FALSE(grassmann_bound(gp(8, 2, 1), GrassmannMethod::johnson1).applicable);
}

TEST_CASE("combined bound") {
  CHECK(combined_bound(gp(6, 3, 2)) == 81);
  CHECK(combined_bound(gp(4, 2, 2)) == 5);
  CHECK(combined_bound(gp(7, 3, 3)) == 17);
  CHECK(combined_bound(gp(7, 4, 3)) == 17);
  CHECK(combined_bound(gp(6, 3, 3)) == 9);
  CHECK(combined_bound(gp(5, 2, 3)) == 1);
  CHECK(combined_bound(gp(5, 0, 1)) == 1);
}

TEST_CASE("delsarte LP") {
  CHECK(delsarte_lp_bound(gp(4, 2, 2)) == 5);
  const Rational v = delsarte_lp_bound(gp(4, 2, 1));
  CHECK(v > 0);
  CHECK(v <= 35);
  const auto lp = delsarte_lp_model(gp(6, 3, 2));
  CHECK(lp.num_variables() == 3);
  CHECK(lp.rows.size() == 2);
  const auto sol = simplex_solve(lp);
  CHECK_FALSE(certificate_violation(lp, sol).has_value());
}

TEST_CASE("degree-one feasible point reproduces johnson1 value") {
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (int delta = 1; delta <= k; ++delta) {
        const auto p = gp(n, k, delta);
        const auto j = johnson1_bound(p);
        if (!j) continue;
        // 1 + f_1 with f_1 = -1/Q_1(delta) is feasible, so the LP is at most that
        const Rational q1 = 1 - Rational(power_int(2, n) - 1) * (1 - power(2, -delta)) /
                                    Rational((power_int(2, k) - 1) * (power_int(2, n - k) - 1));
        REQUIRE(q1 < 0);
        const Rational degree_one = 1 - 1 / q1;
        CHECK(floor(degree_one) == *j);
        CHECK(delsarte_lp_bound(p) <= degree_one);
      }
}

TEST_CASE("best bound and method names") {
  const auto all = best_grassmann_bound(gp(4, 2, 2), all_grassmann_methods());
  CHECK(all.floored == 5);
  CHECK(best_grassmann_bound(gp(7, 3, 3)).floored == 17);
  CHECK(best_grassmann_bound(gp(5, 5, 2)).floored == 1);
  for (auto m : all_grassmann_methods()) CHECK(parse_grassmann_method(method_name(m)) == m);
  CHECK(parse_grassmann_method("all") == GrassmannMethod::best);
  CHECK_THROWS(parse_grassmann_method("plotkin"));
}

TEST_CASE("normalization k -> n-k") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      for (int delta = 1; delta <= n; ++delta) {
        const auto a = gp(n, k, delta), b = gp(n, n - k, delta);
        CHECK(combined_bound(a) == combined_bound(b));
        CHECK(anticode_bound(a) == anticode_bound(b));
        CHECK(sphere_packing_bound(a) == sphere_packing_bound(b));
      }
}
