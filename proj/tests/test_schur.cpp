#include "subspace_bounds/projective_sdp.hpp"
#include "subspace_bounds/schur.hpp"

#include <doctest.h>

#include <random>

using namespace subspace_bounds;

namespace {

template <class T>
Matrix<T> random_spd(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix<T> a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = T(g(rng));
  return a * a.transpose() + Matrix<T>::Identity(n, n);
}

template <class T>
void compare(const SdpData& data, double tol) {
  const auto sdp = to_numeric<T>(data);
  std::mt19937 rng(11);
  std::vector<Matrix<T>> X, W;
  for (std::size_t b = 0; b < sdp.sizes.size(); ++b) {
    if (sdp.diagonal[b]) {
      std::uniform_real_distribution<double> u(0.5, 2.0);
      Matrix<T> x(sdp.sizes[b], 1), w(sdp.sizes[b], 1);
      for (int i = 0; i < sdp.sizes[b]; ++i) {
        x(i, 0) = T(u(rng));
        w(i, 0) = T(u(rng));
      }
      X.push_back(x);
      W.push_back(w);
    } else {
      X.push_back(random_spd<T>(sdp.sizes[b], rng));
      W.push_back(random_spd<T>(sdp.sizes[b], rng));
    }
  }
  const Matrix<T> ref = assemble_schur_reference(sdp, X, W);
  const Matrix<T> serial = assemble_schur(sdp, X, W, 1);
  const Matrix<T> par = assemble_schur(sdp, X, W, 4);
  const T scale = ref.cwiseAbs().maxCoeff();
  CHECK(to_double((ref - serial).cwiseAbs().maxCoeff() / scale) <= tol);
  CHECK(to_double((serial - par).cwiseAbs().maxCoeff()) == 0.0);
  CHECK(to_double((serial - Matrix<T>(serial.transpose())).cwiseAbs().maxCoeff()) == 0.0);
}

}  // namespace

TEST_CASE("schur kernel matches the dense reference, double") {
  for (const ProjectiveParams p : {ProjectiveParams{4, 3, FieldOrder(2)}, ProjectiveParams{7, 3, FieldOrder(2)},
                                   ProjectiveParams{8, 4, FieldOrder(2), Metric::injection}})
    compare<double>(lower_to_sdpa(sdp_model(p, {.theorem51_cuts = true}).program), 1e-12);
}

TEST_CASE("schur kernel matches the dense reference, quad") {
  compare<quad>(lower_to_sdpa(sdp_model({6, 3, FieldOrder(2)}).program), 1e-28);
}
