#include <benchmark/benchmark.h>

#include "spectral_twins/graph.hpp"
#include "spectral_twins/nodal.hpp"
#include "spectral_twins/quantum.hpp"
#include "spectral_twins/spectra.hpp"

using namespace spectral_twins;

static void BM_EigSymPair(benchmark::State& state) {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const Matrix L = laplacian(pair.g1).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(L));
}
BENCHMARK(BM_EigSymPair);

static void BM_CharPoly(benchmark::State& state) {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const Matrix L = laplacian(pair.g1).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(L));
}
BENCHMARK(BM_CharPoly);

static void BM_Transplantation(benchmark::State& state) {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const Matrix L1 = laplacian(pair.g1).matrix;
  const Matrix L2 = laplacian(pair.g2).matrix;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_transplantation(L1, L2, pair.transplantation));
}
BENCHMARK(BM_Transplantation);

static void BM_NodalSequence(benchmark::State& state) {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const Matrix L = laplacian(pair.g1).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(nodal_sequence(pair.g1, L));
}
BENCHMARK(BM_NodalSequence);

static void BM_RegularizedSecularReduced(benchmark::State& state) {
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regularized_secular_7_1(1.0, 2.0, 3.0, k, 1));
    k += 1e-3;
    if (k > 20.0) k = 0.1;
  }
}
BENCHMARK(BM_RegularizedSecularReduced);

static void BM_RegularizedSecularGeneral(benchmark::State& state) {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const MetricGraph mg = metric_from_weighted(pair.g1);
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regularized_secular(mg, k));
    k += 1e-3;
    if (k > 20.0) k = 0.1;
  }
}
BENCHMARK(BM_RegularizedSecularGeneral);

static void BM_SecularScanShort(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(find_roots_reduced_7_1(1.0, 2.0, 3.0, 1, 1e-3, 2.0, 1e-3, 1e-10));
}
BENCHMARK(BM_SecularScanShort);

BENCHMARK_MAIN();
