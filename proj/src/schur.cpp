#include "subspace_bounds/schur.hpp"

#include <omp.h>

#include <algorithm>

namespace subspace_bounds {

template <class T>
void NumericSdp<T>::index() {
  const int nb = num_blocks();
  members.assign(nb, {});
  columns.assign(nb, {});
  for (int b = 0; b < nb; ++b)
    if (diagonal[b]) columns[b].assign(sizes[b], {});
  for (int i = 0; i < m(); ++i)
    for (int b = 0; b < nb; ++b) {
      if (A[i][b].empty()) continue;
      if (diagonal[b]) {
        for (const auto& e : A[i][b]) columns[b][e.row].emplace_back(i, e.value);
      } else {
        members[b].push_back(i);
      }
    }
}

template <class T>
Matrix<T> assemble_schur(const NumericSdp<T>& sdp, const std::vector<Matrix<T>>& X, const std::vector<Matrix<T>>& W,
                         int threads) {
  const int m = sdp.m();
  const int nb = sdp.num_blocks();
  Matrix<T> M = Matrix<T>::Zero(m, m);
  if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    std::vector<T> acc(m, T(0));
    std::vector<char> seen(m, 0);
    std::vector<int> touched;
#pragma omp for schedule(dynamic, 4)
    for (int i = 0; i < m; ++i) {
      touched.clear();
      auto bump = [&](int j, const T& v) {
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        acc[j] += v;
      };
      for (int b = 0; b < nb; ++b) {
        const auto& Ai = sdp.A[i][b];
        if (Ai.empty()) continue;
        const Matrix<T>& Xb = X[b];
        const Matrix<T>& Wb = W[b];
        if (sdp.diagonal[b]) {
          for (const auto& e : Ai) {
            const T d = e.value * Xb(e.row, 0) * Wb(e.row, 0);
            for (const auto& [j, w] : sdp.columns[b][e.row])
              if (j >= i) bump(j, w * d);
          }
          continue;
        }
        const auto& mem = sdp.members[b];
        for (auto it = std::lower_bound(mem.begin(), mem.end(), i); it != mem.end(); ++it) {
          const int j = *it;
          T sum(0);
          for (const auto& p : Ai)
            for (const auto& q : sdp.A[j][b]) sum += p.value * q.value * Xb(p.col, q.row) * Wb(q.col, p.row);
          bump(j, sum);
        }
      }
      for (int j : touched) {
        M(i, j) = acc[j];
        M(j, i) = acc[j];
        acc[j] = T(0);
        seen[j] = 0;
      }
    }
  }
  return M;
}

template <class T>
Matrix<T> assemble_schur_reference(const NumericSdp<T>& sdp, const std::vector<Matrix<T>>& X,
                                   const std::vector<Matrix<T>>& W) {
  const int m = sdp.m();
  Matrix<T> M = Matrix<T>::Zero(m, m);
  for (int b = 0; b < sdp.num_blocks(); ++b) {
    const int n = sdp.sizes[b];
    Matrix<T> Xb = sdp.diagonal[b] ? Matrix<T>(X[b].col(0).asDiagonal()) : X[b];
    Matrix<T> Wb = sdp.diagonal[b] ? Matrix<T>(W[b].col(0).asDiagonal()) : W[b];
    std::vector<Matrix<T>> dense(m);
    for (int i = 0; i < m; ++i) {
      dense[i] = Matrix<T>::Zero(n, n);
      for (const auto& e : sdp.A[i][b]) dense[i](e.row, e.col) += e.value;
    }
    for (int i = 0; i < m; ++i) {
      const Matrix<T> left = dense[i] * Xb;
      for (int j = 0; j < m; ++j) M(i, j) += (left * dense[j] * Wb).trace();
    }
  }
  return M;
}

template <class T>
NumericSdp<T> to_numeric(const SdpData& data) {
  NumericSdp<T> sdp;
  const int m = data.num_variables();
  const int nb = static_cast<int>(data.block_sizes.size());
  sdp.b.resize(m);
  for (int i = 0; i < m; ++i) sdp.b(i) = -from_rational<T>(data.c[i]);
  for (int s : data.block_sizes) {
    sdp.sizes.push_back(std::abs(s));
    sdp.diagonal.push_back(s < 0);
    sdp.C.push_back(Matrix<T>::Zero(std::abs(s), s < 0 ? 1 : std::abs(s)));
  }
  for (const auto& e : data.matrices[0]) {
    const T v = -from_rational<T>(e.value);
    if (sdp.diagonal[e.block]) {
      sdp.C[e.block](e.row, 0) += v;
    } else {
      sdp.C[e.block](e.row, e.col) += v;
      if (e.row != e.col) sdp.C[e.block](e.col, e.row) += v;
    }
  }
  sdp.A.assign(m, std::vector<std::vector<DirectedEntry<T>>>(nb));
  for (int i = 0; i < m; ++i)
    for (const auto& e : data.matrices[i + 1]) {
      const T v = -from_rational<T>(e.value);
      auto& list = sdp.A[i][e.block];
      list.push_back({e.row, e.col, v});
      if (e.row != e.col && !sdp.diagonal[e.block]) list.push_back({e.col, e.row, v});
    }
  sdp.index();
  return sdp;
}

template struct NumericSdp<double>;
template struct NumericSdp<quad>;
template NumericSdp<double> to_numeric(const SdpData&);
template NumericSdp<quad> to_numeric(const SdpData&);
template Matrix<double> assemble_schur(const NumericSdp<double>&, const std::vector<Matrix<double>>&,
                                       const std::vector<Matrix<double>>&, int);
template Matrix<quad> assemble_schur(const NumericSdp<quad>&, const std::vector<Matrix<quad>>&,
                                     const std::vector<Matrix<quad>>&, int);
template Matrix<double> assemble_schur_reference(const NumericSdp<double>&, const std::vector<Matrix<double>>&,
                                                 const std::vector<Matrix<double>>&);
template Matrix<quad> assemble_schur_reference(const NumericSdp<quad>&, const std::vector<Matrix<quad>>&,
                                               const std::vector<Matrix<quad>>&);

}  // namespace subspace_bounds
