#include <benchmark/benchmark.h>

#include "qubitinv/bloch.hpp"
#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/random.hpp"
#include "qubitinv/section.hpp"

using namespace qubitinv;

static void BM_ToBloch(benchmark::State& state) {
  Rng rng(1);
  const DensityOperator rho = random_trace_one(int(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(to_bloch(rho));
}
BENCHMARK(BM_ToBloch)->DenseRange(2, 6);

static void BM_Assemble(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(2);
  const BlochState b = random_bloch(n, rng);
  const VectorField gamma = cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(b, gamma));
  state.counters["invariants"] = double(assemble(b, gamma).size());
}
BENCHMARK(BM_Assemble)->DenseRange(2, 5);

static void BM_Jacobian(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(3);
  const BlochState b = random_bloch(n, rng);
  const VectorField gamma = cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian(b, gamma));
}
BENCHMARK(BM_Jacobian)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Rank(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(4);
  const Eigen::MatrixXcd j = equilibrate_rows(jacobian(random_bloch(n, rng), cycle(n)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(j));
}
BENCHMARK(BM_Rank)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(5);
  const BlochState b = random_bloch(n, rng);
  const VectorField gamma = cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(b, gamma));
}
BENCHMARK(BM_Canonicalize)->DenseRange(2, 4);
BENCHMARK_MAIN();
