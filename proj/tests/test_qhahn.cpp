#include "subspace_bounds/qcombinat.hpp"
#include "subspace_bounds/qhahn.hpp"

#include <doctest.h>

using namespace subspace_bounds;

namespace {

Rational q1_closed_form(int n, int k, int u, int q) {
  const Rational num = Rational(power_int(q, n) - 1) * (1 - power(q, -u));
  const Rational den = Rational((power_int(q, k) - 1) * (power_int(q, n - k) - 1));
  return 1 - num / den;
}

}  // namespace

TEST_CASE("family shape and normalization") {
  const auto fam = hahn_family(4, 2, 2, FieldOrder(2));
  REQUIRE(fam.size() == 3);
  for (const auto& p : fam) {
    CHECK(static_cast<int>(p.coeffs.size()) == p.degree + 1);
    CHECK(sgn(p.coeffs.back()) != 0);
    CHECK(hahn_eval(p, 0) == 1);
  }
  CHECK(hahn_eval(fam[0], 5) == 1);
  CHECK(hahn_eval(fam[1], 2) == Rational(-1, 4));
  CHECK_THROWS(hahn_family(4, 3, 2, FieldOrder(2)));
  CHECK_THROWS(hahn_family(4, 2, 5, FieldOrder(2)));
  CHECK_THROWS(hahn_value(3, 4, 2, 3, 0, FieldOrder(2)));
}

TEST_CASE("exact orthogonality and Q(0)=1 for n <= 16, q = 2") {
  const FieldOrder q(2);
  for (int n = 0; n <= 16; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = s; t <= n; ++t) {
        const auto vals = hahn_values(n, s, t, q);
        const int top = std::min(s, n - t);
        std::vector<BigInt> w;
        for (int i = 0; i <= top; ++i) w.push_back(hahn_weight(n, s, t, i, q));
        for (int l = 0; l <= top; ++l) {
          CHECK((*vals)[l][0] == 1);
          for (int m = 0; m < l; ++m) {
            Rational ip = 0;
            for (int i = 0; i <= top; ++i) ip += w[i] * (*vals)[l][i] * (*vals)[m][i];
            CHECK(sgn(ip) == 0);
          }
          Rational norm = 0;
          for (int i = 0; i <= top; ++i) norm += w[i] * (*vals)[l][i] * (*vals)[l][i];
          CHECK(sgn(norm) > 0);
        }
      }
}

TEST_CASE("orthogonality for q = 3") {
  const FieldOrder q(3);
  for (int n = 0; n <= 8; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = s; t <= n; ++t) {
        const auto fam = hahn_family(n, s, t, q);
        for (std::size_t l = 0; l < fam.size(); ++l)
          for (std::size_t m = 0; m < l; ++m) {
            Rational ip = 0;
            for (int i = 0; i <= std::min(s, n - t); ++i)
              ip += hahn_weight(n, s, t, i, q) * hahn_eval(fam[l], i) * hahn_eval(fam[m], i);
            CHECK(sgn(ip) == 0);
          }
      }
}

TEST_CASE("Q_1 closed form and monotonicity") {
  for (int q : {2, 3})
    for (int n = 2; n <= 16; ++n)
      for (int k = 1; 2 * k <= n; ++k) {
        Rational prev;
        for (int u = 0; u <= k; ++u) {
          const Rational v = hahn_value(1, n, k, k, u, FieldOrder(q));
          CHECK(v == q1_closed_form(n, k, u, q));
          if (u > 0) CHECK(v < prev);
          prev = v;
        }
        if (q == 3 && n > 10) break;
      }
}

TEST_CASE("memoized values agree with direct evaluation") {
  const FieldOrder q(2);
  const auto fam = hahn_family(9, 3, 5, q);
  for (const auto& p : fam)
    for (int u = 0; u <= 3; ++u) CHECK(hahn_eval(p, u) == hahn_value(p.degree, 9, 3, 5, u, q));
}
