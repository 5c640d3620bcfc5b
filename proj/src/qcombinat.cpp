#include "subspace_bounds/qcombinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace subspace_bounds {

void GrassmannParams::validate() const {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (k < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
}

std::string_view metric_name(Metric metric) {
  return metric == Metric::subspace ? "subspace" : "injection";
}

Metric parse_metric(std::string_view name) {
  if (name == "subspace") return Metric::subspace;
  if (name == "injection") return Metric::injection;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

void ProjectiveParams::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d < 1 || d > n) throw std::invalid_argument("d must satisfy 1 <= d <= n");
}

namespace {

class QBinomTable {
 public:
  BigInt get(int n, int k, int q) {
    const auto key = std::make_tuple(n, k, q);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int j = 0; j < k; ++j) {
      num *= power_int(q, static_cast<unsigned>(n - j)) - 1;
      den *= power_int(q, static_cast<unsigned>(k - j)) - 1;
    }
    BigInt value = num / den;
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, BigInt> table_;
};

QBinomTable& qbinom_table() {
  static QBinomTable table;
  return table;
}

BigInt qpow(FieldOrder q, int exponent) {
  if (exponent < 0) throw std::logic_error("negative exponent in integer power");
  return power_int(q.value(), static_cast<unsigned>(exponent));
}

}  // namespace

BigInt qbinom(int n, int k, FieldOrder q) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  if (k == 0) return 1;
  return qbinom_table().get(n, k, q.value());
}

Rational bracket(int u, FieldOrder q) {
  if (u < 0) throw std::invalid_argument("bracket argument must be >= 0");
  Rational r = (Rational(q.value()) - power(q.value(), 1 - u)) / Rational(q.value() - 1);
  r.canonicalize();
  return r;
}

BigInt hahn_weight(int n, int s, int t, int i, FieldOrder q) {
  if (s < 0 || s > t || t > n) throw std::invalid_argument("hahn_weight needs 0 <= s <= t <= n");
  if (i < 0 || i > std::min(s, n - t)) throw std::invalid_argument("hahn_weight index outside [0, min(s, n-t)]");
  return qbinom(s, i, q) * qbinom(n - s, t - s + i, q) * qpow(q, i * (t - s + i));
}

BigInt pair_count(int n, int s, int t, int i, FieldOrder q) {
  if (s < 0 || t < 0 || s > n || t > n) return 0;
  const int lo = std::min(s, t);
  const int hi = std::max(s, t);
  if (i < std::max(0, s + t - n) || i > lo) return 0;
  return qbinom(n, lo, q) * hahn_weight(n, lo, hi, lo - i, q);
}

BigInt ball_size_subspace(int n, int i, int e, FieldOrder q) {
  BigInt total = 0;
  for (int l = 0; l <= e; ++l)
    for (int j = 0; j <= l; ++j)
      total += qbinom(i, j, q) * qbinom(n - i, l - j, q) * qpow(q, j * (l - j));
  return total;
}

BigInt ball_slice_subspace(int n, int i, int k, int e, FieldOrder q) {
  BigInt total = 0;
  const int lo = std::max(0, ceil_div2(i + k - e));
  for (int j = lo; j <= std::min(k, i); ++j)
    total += qbinom(i, j, q) * qbinom(n - i, k - j, q) * qpow(q, (i - j) * (k - j));
  return total;
}

BigInt ball_size_injection(int n, int i, int e, FieldOrder q) {
  BigInt total = 0;
  for (int r = 0; r <= e; ++r) total += qpow(q, r * r) * qbinom(i, r, q) * qbinom(n - i, r, q);
  for (int r = 0; r <= e; ++r)
    for (int alpha = 1; alpha <= r; ++alpha)
      total += qpow(q, r * (r - alpha)) *
               (qbinom(i, r, q) * qbinom(n - i, r - alpha, q) + qbinom(i, r - alpha, q) * qbinom(n - i, r, q));
  return total;
}

BigInt ball_slice_injection(int n, int i, int k, int e, FieldOrder q) {
  const int alpha = std::abs(i - k);
  BigInt total = 0;
  for (int r = alpha; r <= e; ++r) {
    if (i >= k)
      total += qpow(q, r * (r - alpha)) * qbinom(i, r, q) * qbinom(n - i, r - alpha, q);
    else
      total += qpow(q, r * (r - alpha)) * qbinom(i, r - alpha, q) * qbinom(n - i, r, q);
  }
  return total;
}

BigInt projective_space_size(int n, FieldOrder q) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += qbinom(n, k, q);
  return total;
}

}  // namespace subspace_bounds
