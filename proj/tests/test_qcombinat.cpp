#include "subspace_bounds/oracle.hpp"
#include "subspace_bounds/qcombinat.hpp"

#include <doctest.h>

#include <map>
#include <tuple>

using namespace subspace_bounds;

namespace {
const FieldOrder q2(2);
}

TEST_CASE("qbinom small values") {
  CHECK(qbinom(4, 2, q2) == 35);
  CHECK(qbinom(6, 3, q2) == 1395);
  CHECK(qbinom(4, 2, FieldOrder(3)) == 130);
  CHECK(qbinom(5, 0, q2) == 1);
  CHECK(qbinom(5, 6, q2) == 0);
  CHECK(qbinom(5, -1, q2) == 0);
  CHECK(qbinom(16, 8, q2) == BigInt("63379954960524853651"));
}

TEST_CASE("qbinom symmetry and q-Pascal") {
  for (int q : {2, 3, 4, 5})
    for (int n = 1; n <= 14; ++n)
      for (int k = 0; k <= n; ++k) {
        const FieldOrder f(q);
        CHECK(qbinom(n, k, f) == qbinom(n, n - k, f));
        CHECK(qbinom(n, k, f) == qbinom(n - 1, k - 1, f) + power_int(q, k) * qbinom(n - 1, k, f));
      }
}

TEST_CASE("field order only checks q >= 2") {
  CHECK_THROWS(FieldOrder(1));
  CHECK_THROWS(FieldOrder(0));
  CHECK_NOTHROW(FieldOrder(9));
}

TEST_CASE("bracket") {
  CHECK(bracket(0, q2) == 0);
  CHECK(bracket(1, q2) == 1);
  CHECK(bracket(2, q2) == Rational(3, 2));
  CHECK(bracket(3, FieldOrder(3)) == Rational(13, 9));
}

TEST_CASE("weights sum to qbinom(n,t)") {
  for (int q : {2, 3})
    for (int n = 0; n <= 12; ++n)
      for (int s = 0; s <= n; ++s)
        for (int t = s; t <= n; ++t) {
          BigInt sum = 0;
          for (int i = 0; i <= std::min(s, n - t); ++i) sum += hahn_weight(n, s, t, i, FieldOrder(q));
          CHECK(sum == qbinom(n, t, FieldOrder(q)));
        }
}

TEST_CASE("pair counts sum and symmetry") {
  for (int n = 0; n <= 9; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = 0; t <= n; ++t) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i) {
          sum += pair_count(n, s, t, i, q2);
          CHECK(pair_count(n, s, t, i, q2) == pair_count(n, t, s, i, q2));
        }
        CHECK(sum == qbinom(n, s, q2) * qbinom(n, t, q2));
      }
  CHECK(pair_count(4, 1, 3, 0, q2) == 120);
  CHECK(pair_count(4, 2, 2, 3, q2) == 0);
}

TEST_CASE("ball sizes and slices") {
  CHECK(ball_size_subspace(4, 2, 1, q2) == 7);
  CHECK(ball_slice_injection(7, 3, 3, 1, q2) == 211);
  CHECK(ball_slice_injection(7, 3, 3, 0, q2) == 1);
  CHECK(ball_slice_injection(7, 3, 2, 0, q2) == 0);
  for (int n = 1; n <= 9; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e <= n; ++e) {
        BigInt s = 0, si = 0;
        for (int k = 0; k <= n; ++k) {
          s += ball_slice_subspace(n, i, k, e, q2);
          si += ball_slice_injection(n, i, k, e, q2);
        }
        CHECK(s == ball_size_subspace(n, i, e, q2));
        CHECK(si == ball_size_injection(n, i, e, q2));
      }
}

TEST_CASE("formulas agree with enumeration over F_2, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto spaces = oracle::enumerate_projective(n);
    CHECK(BigInt(static_cast<long>(spaces.size())) == projective_space_size(n, q2));
    std::map<std::tuple<int, int, int>, long> pairs;
    for (const auto& u : spaces)
      for (const auto& v : spaces) ++pairs[{u.dim, v.dim, oracle::intersection_dim(u, v)}];
    for (int s = 0; s <= n; ++s)
      for (int t = 0; t <= n; ++t)
        for (int i = 0; i <= n; ++i) CHECK(pair_count(n, s, t, i, q2) == BigInt(pairs[{s, t, i}]));

    // one representative per dimension suffices: balls are invariant under GL(n)
    for (int dim = 0; dim <= n; ++dim) {
      const oracle::Subspace* center = nullptr;
      for (const auto& u : spaces)
        if (u.dim == dim) {
          center = &u;
          break;
        }
      REQUIRE(center);
      for (int e = 0; e <= n; ++e)
        for (int k = 0; k <= n; ++k) {
          long sub = 0, inj = 0;
          for (const auto& v : spaces) {
            if (v.dim != k) continue;
            sub += oracle::distance(*center, v, Metric::subspace) <= e;
            inj += oracle::distance(*center, v, Metric::injection) <= e;
          }
          CHECK(ball_slice_subspace(n, dim, k, e, q2) == BigInt(sub));
          CHECK(ball_slice_injection(n, dim, k, e, q2) == BigInt(inj));
        }
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((GrassmannParams{4, 5, 1, q2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GrassmannParams{4, 2, 0, q2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ProjectiveParams{4, 0, q2}.validate()), std::invalid_argument);
  CHECK_NOTHROW((ProjectiveParams{4, 4, q2}.validate()));
  CHECK(parse_metric("injection") == Metric::injection);
  CHECK_THROWS(parse_metric("hamming"));
}
