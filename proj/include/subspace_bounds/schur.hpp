#pragma once

#include "subspace_bounds/numeric.hpp"
#include "subspace_bounds/sdp_data.hpp"

#include <utility>
#include <vector>

namespace subspace_bounds {

/// One entry of a constraint matrix, listed in both orientations for
/// off-diagonal positions so that <A, G> = sum value * G(col, row).
template <class T>
struct DirectedEntry {
  int row;
  int col;
  T value;
};

/// SDP in the dual form  maximize b.y  subject to  C - sum_i y_i A_i PSD,
/// with primal  minimize <C, X>  subject to  <A_i, X> = b_i, X PSD.
/// Diagonal blocks store C, X and Z as n x 1 columns.
template <class T>
struct NumericSdp {
  std::vector<int> sizes;
  std::vector<bool> diagonal;
  Vector<T> b;
  std::vector<Matrix<T>> C;
  /// A[i][block]: directed entries of constraint i in that block.
  std::vector<std::vector<std::vector<DirectedEntry<T>>>> A;
  /// For each dense block, the constraints with entries in it (ascending).
  std::vector<std::vector<int>> members;
  /// For each diagonal block and index l, the pairs (i, A_i(l, l)).
  std::vector<std::vector<std::vector<std::pair<int, T>>>> columns;

  int m() const { return static_cast<int>(b.size()); }
  int num_blocks() const { return static_cast<int>(sizes.size()); }
  /// Fills members and columns from A.
  void index();
};

/// Numeric form of an SDPA-convention program: b = -c, A_i = -F_i, C = -F_0.
template <class T>
NumericSdp<T> to_numeric(const SdpData& data);

/// M_ij = sum over blocks of tr(A_i X A_j W) with W = Z^{-1}. Rows are
/// distributed over OpenMP threads (threads <= 0 means the runtime
/// default); every entry is accumulated by one thread in a fixed order,
/// so the result does not depend on the thread count.
template <class T>
Matrix<T> assemble_schur(const NumericSdp<T>& sdp, const std::vector<Matrix<T>>& X,
                         const std::vector<Matrix<T>>& W, int threads = 0);

/// Serial reference: forms every A_i densely and multiplies matrices.
template <class T>
Matrix<T> assemble_schur_reference(const NumericSdp<T>& sdp, const std::vector<Matrix<T>>& X,
                                   const std::vector<Matrix<T>>& W);

}  // namespace subspace_bounds
