#include "subspace_bounds/ipm.hpp"

#include "subspace_bounds/numeric.hpp"
#include "subspace_bounds/schur.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace subspace_bounds {

std::string_view status_name(IpmStatus status) {
  switch (status) {
    case IpmStatus::optimal: return "optimal";
    case IpmStatus::max_iterations: return "max_iterations";
    case IpmStatus::numerical_failure: return "numerical_failure";
    case IpmStatus::infeasible: return "infeasible";
  }
  return "?";
}

namespace {

using Key = std::tuple<int, int, int>;
using SparseMat = std::map<Key, Rational>;

struct DiagRow {
  int block;
  int index;
  LinearForm coeffs;
  Rational constant;
};

}  // namespace

PresolvedSdp presolve_sdp(const SdpData& input) {
  const int m = input.num_variables();
  const int nb = static_cast<int>(input.block_sizes.size());
  std::vector<SparseMat> F(m + 1);
  for (int i = 0; i <= m; ++i)
    for (const auto& e : input.matrices[i]) {
      auto& slot = F[i][{e.block, std::min(e.row, e.col), std::max(e.row, e.col)}];
      slot += e.value;
    }
  std::vector<Rational> c = input.c;
  std::vector<bool> alive(m, true);
  Rational kappa = 0;
  struct Elimination {
    int var;
    Rational constant;
    LinearForm form;
  };
  std::vector<Elimination> eliminations;

  auto collect_rows = [&]() {
    std::map<std::pair<int, int>, DiagRow> rows;
    for (int b = 0; b < nb; ++b)
      if (input.block_sizes[b] < 0)
        for (int l = 0; l < -input.block_sizes[b]; ++l) rows[{b, l}] = DiagRow{b, l, {}, 0};
    for (int i = 1; i <= m; ++i) {
      if (!alive[i - 1]) continue;
      for (const auto& [key, v] : F[i]) {
        const auto [b, r, col] = key;
        if (input.block_sizes[b] < 0 && sgn(v) != 0) rows[{b, r}].coeffs.emplace_back(i - 1, v);
      }
    }
    for (const auto& [key, v] : F[0]) {
      const auto [b, r, col] = key;
      if (input.block_sizes[b] < 0) rows[{b, r}].constant = v;
    }
    return rows;
  };

  for (;;) {
    const auto rows = collect_rows();
    std::map<std::pair<int, std::string>, std::pair<const DiagRow*, int>> seen;
    const DiagRow* equality = nullptr;
    for (const auto& [key, row] : rows) {
      if (row.coeffs.empty()) continue;
      const int s = sgn(row.coeffs.front().second);
      std::string sig;
      for (const auto& [var, v] : row.coeffs) sig += std::to_string(var) + ":" + to_string(Rational(s * v)) + ",";
      sig += "|" + to_string(Rational(s * row.constant));
      auto [it, inserted] = seen.try_emplace({row.block, sig}, &row, s);
      if (!inserted && it->second.second != s) {
        equality = s > 0 ? &row : it->second.first;
        break;
      }
    }
    if (!equality) break;

    // sum a_i x_i = c0; eliminate the variable whose matrix has fewest entries
    const auto& a = equality->coeffs;
    const Rational c0 = equality->constant;
    int pivot = -1;
    Rational a_pivot;
    for (const auto& [var, v] : a)
      if (pivot < 0 || F[var + 1].size() < F[pivot + 1].size()) {
        pivot = var;
        a_pivot = v;
      }
    Elimination elim{pivot, c0 / a_pivot, {}};
    const SparseMat Fj = F[pivot + 1];
    const Rational cj = c[pivot];
    for (const auto& [var, v] : a) {
      if (var == pivot) continue;
      const Rational ratio = v / a_pivot;
      elim.form.emplace_back(var, -ratio);
      for (const auto& [key, w] : Fj) {
        auto& slot = F[var + 1][key];
        slot -= ratio * w;
        if (sgn(slot) == 0) F[var + 1].erase(key);
      }
      c[var] -= ratio * cj;
    }
    for (const auto& [key, w] : Fj) {
      auto& slot = F[0][key];
      slot -= elim.constant * w;
      if (sgn(slot) == 0) F[0].erase(key);
    }
    kappa += cj * elim.constant;
    alive[pivot] = false;
    F[pivot + 1].clear();
    eliminations.push_back(std::move(elim));
  }

  // drop constant diagonal rows, checking that they hold
  const auto rows = collect_rows();
  std::vector<std::vector<int>> new_index(nb);
  std::vector<int> new_block(nb, -1);
  PresolvedSdp out;
  for (int b = 0; b < nb; ++b) {
    if (input.block_sizes[b] > 0) {
      new_block[b] = static_cast<int>(out.data.block_sizes.size());
      out.data.block_sizes.push_back(input.block_sizes[b]);
      continue;
    }
    const int size = -input.block_sizes[b];
    new_index[b].assign(size, -1);
    int kept = 0;
    for (int l = 0; l < size; ++l) {
      const auto& row = rows.at({b, l});
      if (row.coeffs.empty()) {
        if (sgn(row.constant) > 0)
          throw std::runtime_error("SDP presolve: constant row " + std::to_string(l) + " of block " +
                                   std::to_string(b + 1) + " is violated");
        continue;
      }
      new_index[b][l] = kept++;
    }
    if (kept > 0) {
      new_block[b] = static_cast<int>(out.data.block_sizes.size());
      out.data.block_sizes.push_back(-kept);
    }
  }

  std::vector<int> var_map(m, -1);
  int reduced = 0;
  for (int j = 0; j < m; ++j)
    if (alive[j]) var_map[j] = reduced++;
  out.data.c.resize(reduced);
  out.data.matrices.assign(reduced + 1, {});
  for (int i = 0; i <= m; ++i) {
    if (i > 0 && !alive[i - 1]) continue;
    const int target = i == 0 ? 0 : var_map[i - 1] + 1;
    if (i > 0) out.data.c[target - 1] = c[i - 1];
    for (const auto& [key, v] : F[i]) {
      const auto [b, r, col] = key;
      if (new_block[b] < 0) continue;
      if (input.block_sizes[b] < 0) {
        if (new_index[b][r] < 0) continue;
        out.data.matrices[target].push_back({new_block[b], new_index[b][r], new_index[b][r], v});
      } else {
        out.data.matrices[target].push_back({new_block[b], r, col, v});
      }
    }
  }

  out.constant_objective = kappa;
  out.eliminated = static_cast<int>(eliminations.size());
  out.recover.assign(m, {Rational(0), {}});
  for (int j = 0; j < m; ++j)
    if (alive[j]) out.recover[j].second.emplace_back(var_map[j], Rational(1));
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    auto& target = out.recover[it->var];
    target.first = it->constant;
    for (const auto& [var, coeff] : it->form) {
      const auto& src = out.recover[var];
      target.first += coeff * src.first;
      for (const auto& [rv, rc] : src.second) add_term(target.second, rv, coeff * rc);
    }
  }
  return out;
}

namespace {

template <class T>
using Blocks = std::vector<Matrix<T>>;

template <class T>
T inner(const NumericSdp<T>& sdp, const Blocks<T>& a, const Blocks<T>& b) {
  T sum(0);
  for (int k = 0; k < sdp.num_blocks(); ++k) sum += a[k].cwiseProduct(b[k]).sum();
  return sum;
}

template <class T>
T frob(const NumericSdp<T>& sdp, const Blocks<T>& a) {
  using std::sqrt;
  return sqrt(inner(sdp, a, a));
}

/// (A(G))_i = <A_i, G>; G need not be symmetric.
template <class T>
Vector<T> apply_A(const NumericSdp<T>& sdp, const Blocks<T>& G) {
  Vector<T> out = Vector<T>::Zero(sdp.m());
  for (int i = 0; i < sdp.m(); ++i) {
    T sum(0);
    for (int b = 0; b < sdp.num_blocks(); ++b)
      for (const auto& e : sdp.A[i][b]) sum += e.value * (sdp.diagonal[b] ? G[b](e.row, 0) : G[b](e.col, e.row));
    out(i) = sum;
  }
  return out;
}

template <class T>
Blocks<T> apply_At(const NumericSdp<T>& sdp, const Vector<T>& y) {
  Blocks<T> out;
  for (int b = 0; b < sdp.num_blocks(); ++b) out.push_back(Matrix<T>::Zero(sdp.C[b].rows(), sdp.C[b].cols()));
  for (int i = 0; i < sdp.m(); ++i) {
    if (y(i) == T(0)) continue;
    for (int b = 0; b < sdp.num_blocks(); ++b)
      for (const auto& e : sdp.A[i][b]) {
        if (sdp.diagonal[b])
          out[b](e.row, 0) += y(i) * e.value;
        else
          out[b](e.row, e.col) += y(i) * e.value;
      }
  }
  return out;
}

/// Largest alpha with X + alpha dX PSD (infinity if dX does not leave the cone).
template <class T>
T max_step(const NumericSdp<T>& sdp, const Blocks<T>& X, const Blocks<T>& dX, bool& ok) {
  T best = std::numeric_limits<T>::infinity();
  ok = true;
  for (int b = 0; b < sdp.num_blocks(); ++b) {
    if (sdp.diagonal[b]) {
      for (int l = 0; l < X[b].rows(); ++l)
        if (dX[b](l, 0) < T(0)) best = std::min<T>(best, -X[b](l, 0) / dX[b](l, 0));
      continue;
    }
    Eigen::LLT<Matrix<T>> llt(X[b]);
    if (llt.info() != Eigen::Success) {
      ok = false;
      return T(0);
    }
    const auto L = llt.matrixL();
    Matrix<T> tmp = L.solve(dX[b]);
    Matrix<T> S = L.solve(tmp.transpose());
    S = (S + S.transpose()) / T(2);
    Eigen::SelfAdjointEigenSolver<Matrix<T>> eig(S, Eigen::EigenvaluesOnly);
    const T lmin = eig.eigenvalues().minCoeff();
    if (lmin < T(0)) best = std::min<T>(best, T(-1) / lmin);
  }
  return best;
}

template <class T>
IpmResult run_ipm(const PresolvedSdp& pre, const IpmOptions& opt) {
  using std::abs;
  using std::max;
  using std::min;
  using std::sqrt;
  const NumericSdp<T> sdp = to_numeric<T>(pre.data);
  const int m = sdp.m();
  const int nb = sdp.num_blocks();
  const T offset = -from_rational<T>(pre.constant_objective);
  IpmResult res;
  res.eliminated_equalities = pre.eliminated;

  auto finish_x = [&](const Vector<T>& y) {
    res.x.assign(pre.recover.size(), 0.0);
    for (std::size_t j = 0; j < pre.recover.size(); ++j) {
      T v = from_rational<T>(pre.recover[j].first);
      for (const auto& [rv, rc] : pre.recover[j].second) v += from_rational<T>(rc) * y(rv);
      res.x[j] = to_double(v);
    }
  };

  if (m == 0) {
    // nothing to optimize: only check that C is PSD
    bool psd = true;
    for (int b = 0; b < nb; ++b) {
      if (sdp.diagonal[b]) {
        psd = psd && sdp.C[b].minCoeff() >= T(0);
      } else if (sdp.sizes[b] > 0) {
        Eigen::SelfAdjointEigenSolver<Matrix<T>> eig(sdp.C[b], Eigen::EigenvaluesOnly);
        psd = psd && eig.eigenvalues().minCoeff() >= -T(1e-12) * max(T(1), eig.eigenvalues().cwiseAbs().maxCoeff());
      }
    }
    res.status = psd ? IpmStatus::optimal : IpmStatus::infeasible;
    res.primal_value = res.dual_value = to_double(offset);
    finish_x(Vector<T>::Zero(0));
    res.message = psd ? "no free variables" : "constant constraints violated";
    return res;
  }

  // starting point after SDPT3
  Blocks<T> X(nb), Z(nb);
  int total_dim = 0;
  for (int b = 0; b < nb; ++b) {
    const int n = sdp.sizes[b];
    total_dim += n;
    T norm_c = sdp.C[b].norm();
    T xi = max(T(10), sqrt(T(n)));
    T eta = max(xi, norm_c);
    for (int i = 0; i < m; ++i) {
      if (sdp.A[i][b].empty()) continue;
      T na(0);
      for (const auto& e : sdp.A[i][b]) na += e.value * e.value;
      na = sqrt(na);
      xi = max(xi, sqrt(T(n)) * (T(1) + abs(sdp.b(i))) / (T(1) + na));
      eta = max(eta, na);
    }
    if (sdp.diagonal[b]) {
      X[b] = Matrix<T>::Constant(n, 1, xi);
      Z[b] = Matrix<T>::Constant(n, 1, eta);
    } else {
      X[b] = xi * Matrix<T>::Identity(n, n);
      Z[b] = eta * Matrix<T>::Identity(n, n);
    }
  }
  Vector<T> y = Vector<T>::Zero(m);
  const T norm_b = sdp.b.norm();
  T norm_C(0);
  for (int b = 0; b < nb; ++b) norm_C += sdp.C[b].squaredNorm();
  norm_C = sqrt(norm_C);
  const T tol(opt.tol);

  auto record = [&](const T& pobj, const T& dobj, const T& pinf, const T& dinf) {
    res.primal_value = to_double(dobj + offset);
    res.dual_value = to_double(pobj + offset);
    res.gap = to_double(abs(pobj - dobj));
    res.relative_gap = to_double(abs(pobj - dobj) / (T(1) + abs(pobj + offset) + abs(dobj + offset)));
    res.primal_infeasibility = to_double(pinf);
    res.dual_infeasibility = to_double(dinf);
  };

  res.status = IpmStatus::max_iterations;
  for (int iter = 0;; ++iter) {
    const Blocks<T> AtY = apply_At(sdp, y);
    Blocks<T> Rd(nb);
    for (int b = 0; b < nb; ++b) Rd[b] = sdp.C[b] - Z[b] - AtY[b];
    const Vector<T> rp = sdp.b - apply_A(sdp, X);
    const T pobj = inner(sdp, sdp.C, X);
    const T dobj = sdp.b.dot(y);
    const T pinf = rp.norm() / (T(1) + norm_b);
    const T dinf = frob(sdp, Rd) / (T(1) + norm_C);
    record(pobj, dobj, pinf, dinf);
    res.iterations = iter;
    const T relgap = abs(pobj - dobj) / (T(1) + abs(pobj + offset) + abs(dobj + offset));
    if (opt.verbose)
      std::fprintf(stderr, "ipm %3d  p %.12e  d %.12e  gap %.2e  pinf %.2e  dinf %.2e\n", iter,
                   res.dual_value, res.primal_value, to_double(relgap), to_double(pinf), to_double(dinf));
    if (relgap <= tol && pinf <= tol && dinf <= tol) {
      res.status = IpmStatus::optimal;
      break;
    }
    if (iter >= opt.max_iterations) break;
    if (!(abs(dobj) < T(1e60)) || !(abs(pobj) < T(1e60))) {
      res.status = IpmStatus::infeasible;
      res.message = "iterates diverged";
      break;
    }

    const T mu = inner(sdp, X, Z) / T(total_dim);
    Blocks<T> W(nb);
    bool ok = true;
    for (int b = 0; b < nb && ok; ++b) {
      if (sdp.diagonal[b]) {
        W[b] = Z[b].cwiseInverse();
      } else {
        Eigen::LLT<Matrix<T>> llt(Z[b]);
        ok = llt.info() == Eigen::Success;
        W[b] = llt.solve(Matrix<T>::Identity(sdp.sizes[b], sdp.sizes[b]));
        W[b] = (W[b] + W[b].transpose()) / T(2);
      }
    }
    if (!ok) {
      res.status = IpmStatus::numerical_failure;
      res.message = "dual slack lost definiteness";
      break;
    }
    Matrix<T> M = assemble_schur(sdp, X, W, opt.threads);
    Eigen::LLT<Matrix<T>> chol(M);
    // near the optimum M can lose definiteness to rounding; retry with a
    // small diagonal shift (the residuals still decide convergence)
    T shift = std::numeric_limits<T>::epsilon() * T(100) * M.diagonal().cwiseAbs().maxCoeff();
    for (int attempt = 0; attempt < 6 && chol.info() != Eigen::Success; ++attempt, shift *= T(100)) {
      M.diagonal().array() += shift;
      chol.compute(M);
    }
    if (chol.info() != Eigen::Success) {
      res.status = IpmStatus::numerical_failure;
      res.message = "Schur complement not positive definite";
      break;
    }
    Blocks<T> H(nb);
    for (int b = 0; b < nb; ++b)
      H[b] = sdp.diagonal[b] ? Matrix<T>(X[b].cwiseProduct(Rd[b]).cwiseProduct(W[b])) : Matrix<T>(X[b] * Rd[b] * W[b]);
    const Vector<T> AH = apply_A(sdp, H);

    // G = Rc W for Rc = sigma mu I - X Z - corr
    auto direction = [&](const Blocks<T>& G, Vector<T>& dy, Blocks<T>& dX, Blocks<T>& dZ) {
      const Vector<T> rhs = rp - apply_A(sdp, G) + AH;
      dy = chol.solve(rhs);
      const Blocks<T> Ady = apply_At(sdp, dy);
      dX.assign(nb, {});
      dZ.assign(nb, {});
      for (int b = 0; b < nb; ++b) {
        dZ[b] = Rd[b] - Ady[b];
        if (sdp.diagonal[b]) {
          dX[b] = G[b] - X[b].cwiseProduct(dZ[b]).cwiseProduct(W[b]);
        } else {
          Matrix<T> d = G[b] - X[b] * dZ[b] * W[b];
          dX[b] = (d + d.transpose()) / T(2);
        }
      }
    };

    Blocks<T> G(nb);
    for (int b = 0; b < nb; ++b) G[b] = -X[b];
    Vector<T> dy_a;
    Blocks<T> dX_a, dZ_a;
    direction(G, dy_a, dX_a, dZ_a);
    bool okp = true, okd = true;
    const T ap_a = min(T(1), max_step(sdp, X, dX_a, okp));
    const T ad_a = min(T(1), max_step(sdp, Z, dZ_a, okd));
    if (!okp || !okd) {
      res.status = IpmStatus::numerical_failure;
      res.message = "iterate lost definiteness";
      break;
    }
    Blocks<T> Xa(nb), Za(nb);
    for (int b = 0; b < nb; ++b) {
      Xa[b] = X[b] + ap_a * dX_a[b];
      Za[b] = Z[b] + ad_a * dZ_a[b];
    }
    const T ratio = inner(sdp, Xa, Za) / inner(sdp, X, Z);
    const T sigma = min(T(1), max(T(0), ratio * ratio * ratio));

    for (int b = 0; b < nb; ++b) {
      if (sdp.diagonal[b])
        G[b] = sigma * mu * W[b] - X[b] - dX_a[b].cwiseProduct(dZ_a[b]).cwiseProduct(W[b]);
      else
        G[b] = sigma * mu * W[b] - X[b] - dX_a[b] * dZ_a[b] * W[b];
    }
    Vector<T> dy;
    Blocks<T> dX, dZ;
    direction(G, dy, dX, dZ);
    const T gamma = T(0.9) + T(0.09) * min(ap_a, ad_a);
    const T ap = min(T(1), gamma * max_step(sdp, X, dX, okp));
    const T ad = min(T(1), gamma * max_step(sdp, Z, dZ, okd));
    if (!okp || !okd) {
      res.status = IpmStatus::numerical_failure;
      res.message = "iterate lost definiteness";
      break;
    }
    for (int b = 0; b < nb; ++b) {
      X[b] += ap * dX[b];
      Z[b] += ad * dZ[b];
      if (!sdp.diagonal[b]) {
        X[b] = (X[b] + X[b].transpose()) / T(2);
        Z[b] = (Z[b] + Z[b].transpose()) / T(2);
      }
    }
    y += ad * dy;
  }
  finish_x(y);
  return res;
}

}  // namespace

IpmResult ipm_solve(const SdpData& data, const IpmOptions& options) {
  PresolvedSdp pre;
  try {
    pre = presolve_sdp(data);
  } catch (const std::runtime_error& e) {
    IpmResult res;
    res.status = IpmStatus::infeasible;
    res.message = e.what();
    return res;
  }
  if (options.precision == IpmPrecision::quad_precision) return run_ipm<quad>(pre, options);
  return run_ipm<double>(pre, options);
}

}  // namespace subspace_bounds
