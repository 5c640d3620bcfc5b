#include "subspace_bounds/qhahn.hpp"

#include "subspace_bounds/qcombinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace subspace_bounds {

namespace {

Rational eval_in_bracket(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<HahnPolynomial> hahn_family(int n, int s, int t, FieldOrder q) {
  if (s < 0 || s > t || t > n) throw std::invalid_argument("hahn_family needs 0 <= s <= t <= n");
  const int top = std::min(s, n - t);

  std::vector<Rational> points;
  std::vector<Rational> weights;
  for (int i = 0; i <= top; ++i) {
    points.push_back(bracket(i, q));
    weights.emplace_back(hahn_weight(n, s, t, i, q));
  }

  // Orthogonalize the monomials; values at the support points ride along
  // with the coefficients so inner products stay cheap.
  std::vector<std::vector<Rational>> basis_coeffs;
  std::vector<std::vector<Rational>> basis_values;
  std::vector<Rational> basis_norms;
  for (int l = 0; l <= top; ++l) {
    std::vector<Rational> coeffs(l + 1, Rational(0));
    coeffs[l] = 1;
    std::vector<Rational> values(top + 1);
    for (int i = 0; i <= top; ++i) {
      Rational p = 1;
      for (int j = 0; j < l; ++j) p *= points[i];
      values[i] = p;
    }
    for (int m = 0; m < l; ++m) {
      Rational dot = 0;
      for (int i = 0; i <= top; ++i) dot += weights[i] * values[i] * basis_values[m][i];
      const Rational factor = dot / basis_norms[m];
      for (int j = 0; j <= m; ++j) coeffs[j] -= factor * basis_coeffs[m][j];
      for (int i = 0; i <= top; ++i) values[i] -= factor * basis_values[m][i];
    }
    Rational norm = 0;
    for (int i = 0; i <= top; ++i) norm += weights[i] * values[i] * values[i];
    basis_coeffs.push_back(std::move(coeffs));
    basis_values.push_back(std::move(values));
    basis_norms.push_back(norm);
  }

  std::vector<HahnPolynomial> family;
  family.reserve(top + 1);
  for (int l = 0; l <= top; ++l) {
    // [0] = 0, so the value at u = 0 is the constant coefficient.
    const Rational at_zero = basis_coeffs[l][0];
    if (at_zero == 0) throw std::logic_error("q-Hahn polynomial vanishes at u = 0");
    HahnPolynomial p{n, s, t, l, q, {}};
    for (const auto& c : basis_coeffs[l]) p.coeffs.push_back(c / at_zero);
    family.push_back(std::move(p));
  }
  return family;
}

Rational hahn_eval(const HahnPolynomial& p, int u) {
  return eval_in_bracket(p.coeffs, bracket(u, p.q));
}

namespace {

using ValueTable = std::vector<std::vector<Rational>>;

class HahnCache {
 public:
  std::shared_ptr<const ValueTable> get(int n, int s, int t, FieldOrder q) {
    const auto key = std::make_tuple(n, s, t, q.value());
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto family = hahn_family(n, s, t, q);
    auto table = std::make_shared<ValueTable>();
    const int top = std::min(s, n - t);
    for (const auto& p : family) {
      std::vector<Rational> row;
      for (int u = 0; u <= top; ++u) row.push_back(hahn_eval(p, u));
      table->push_back(std::move(row));
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(table));
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int, int>, std::shared_ptr<const ValueTable>> cache_;
};

HahnCache& hahn_cache() {
  static HahnCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const std::vector<std::vector<Rational>>> hahn_values(int n, int s, int t, FieldOrder q) {
  return hahn_cache().get(n, s, t, q);
}

Rational hahn_value(int l, int n, int s, int t, int u, FieldOrder q) {
  const auto table = hahn_values(n, s, t, q);
  if (l < 0 || l >= static_cast<int>(table->size()))
    throw std::invalid_argument("q-Hahn degree outside [0, min(s, n-t)]");
  if (u < 0 || u >= static_cast<int>((*table)[l].size()))
    throw std::invalid_argument("q-Hahn argument outside [0, min(s, n-t)]");
  return (*table)[l][u];
}

}  // namespace subspace_bounds
