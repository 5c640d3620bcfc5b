// Schur complement assembly: dense reference vs the sparse kernel on one
// thread vs the OpenMP kernel. The dense reference is only run at small n:
// it materializes every constraint matrix, including the large diagonal block.

#include "subspace_bounds/projective_sdp.hpp"
#include "subspace_bounds/schur.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>
#include <random>

using namespace subspace_bounds;

namespace {

struct Fixture {
  NumericSdp<double> sdp;
  std::vector<Matrix<double>> X, W;
};

const Fixture& fixture(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Fixture f;
  f.sdp = to_numeric<double>(lower_to_sdpa(sdp_model({n, 3, FieldOrder(2)}).program));
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int b = 0; b < f.sdp.num_blocks(); ++b) {
    const int s = f.sdp.sizes[b];
    if (f.sdp.diagonal[b]) {
      f.X.push_back(Matrix<double>::Constant(s, 1, 1.0));
      f.W.push_back(Matrix<double>::Constant(s, 1, 0.5));
      continue;
    }
    for (auto* target : {&f.X, &f.W}) {
      Matrix<double> a(s, s);
      for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) a(r, c) = g(rng);
      target->push_back(a * a.transpose() + Matrix<double>::Identity(s, s));
    }
  }
  return cache.emplace(n, std::move(f)).first->second;
}

void BM_reference(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_schur_reference(f.sdp, f.X, f.W));
  state.counters["m"] = f.sdp.m();
}

void BM_serial(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_schur(f.sdp, f.X, f.W, 1));
  state.counters["m"] = f.sdp.m();
}

void BM_openmp(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_schur(f.sdp, f.X, f.W, 0));
  state.counters["m"] = f.sdp.m();
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_reference)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial)->Arg(6)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_openmp)->Arg(6)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
