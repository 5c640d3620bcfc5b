#include "subspace_bounds/grassmann.hpp"
#include "subspace_bounds/projective_sdp.hpp"

#include <doctest.h>

#include <cmath>

using namespace subspace_bounds;

TEST_CASE("anticode against sphere packing and singleton, q in {2,3}, n <= 12") {
  for (int q : {2, 3})
    for (int n = 1; n <= 12; ++n)
      for (int k = 1; 2 * k <= n; ++k)
        for (int delta = 1; delta <= k; ++delta) {
          const GrassmannParams p{n, k, delta, FieldOrder(q)};
          const Rational a = anticode_bound(p);
          CHECK(a <= sphere_packing_bound(p));
          CHECK(a <= Rational(singleton_bound(p)));
          const bool equal = a == Rational(singleton_bound(p));
          CHECK(equal == (delta == 1));
          CHECK(combined_bound(p) <= floor(a));
          if (delta == 1) CHECK(a == sphere_packing_bound(p));
        }
  // n = k: a single codeword, all three coincide
  for (int n = 1; n <= 6; ++n) {
    const GrassmannParams p{n, n, 1, FieldOrder(2)};
    CHECK(anticode_bound(p) == 1);
    CHECK(singleton_bound(p) == 1);
  }
}

TEST_CASE("Delsarte LP Johnson-type inequality, q = 2, n <= 10") {
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (int delta = 1; delta <= k - 1; ++delta) {
        const double big = to_double(delsarte_lp_bound({n, k, delta, FieldOrder(2)}));
        const double small = to_double(delsarte_lp_bound({n - 1, k - 1, delta, FieldOrder(2)}));
        const double factor = (std::pow(2.0, n) - 1) / (std::pow(2.0, k) - 1);
        CHECK(big <= factor * small + 1e-6);
      }
}

TEST_CASE("combined bound never exceeds the anticode bound, q in {2,3,4}") {
  for (int q : {2, 3, 4})
    for (int n = 2; n <= 12; ++n)
      for (int k = 1; 2 * k <= n; ++k)
        for (int delta = 1; delta <= k; ++delta) {
          const GrassmannParams p{n, k, delta, FieldOrder(q)};
          CHECK(Rational(combined_bound(p)) <= anticode_bound(p));
          CHECK(combined_bound(p) <= johnson2_chain_bound(p));
        }
}

TEST_CASE("reduced SDP monotone in d for n = 8") {
  // quad precision: the double path can lose definiteness near the optimum
  IpmOptions o;
  for (auto metric : {Metric::subspace, Metric::injection}) {
    double prev = 1e300;
    for (int d = 1; d <= 8; ++d) {
      const auto r = solve_sdp(sdp_model({8, d, FieldOrder(2), metric}), o);
      REQUIRE(r.status == IpmStatus::optimal);
      CHECK(r.value <= prev * (1 + 1e-7));
      prev = r.value;
    }
  }
}
