// Parallel kernels against their serial counterparts.
#include "opkit/component.hpp"
#include "opkit/linalg.hpp"
#include "opkit/presentation.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace opkit;

// Sparse integer matrix with a planted rank deficit (last third of rows are
// combinations of the first two thirds).
SparseMatrix planted(int rows, int cols, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
  const int free_rows = 2 * rows / 3;
  for (int r = 0; r < free_rows; ++r)
    for (int j = 0; j < cols; ++j)
      if (u(rng) < density) dense[r][j] = c(rng);
  std::uniform_int_distribution<int> pick(0, free_rows - 1);
  for (int r = free_rows; r < rows; ++r)
    for (int t = 0; t < 3; ++t) {
      const int src = pick(rng);
      const Rational k = c(rng);
      for (int j = 0; j < cols; ++j) dense[r][j] += k * dense[src][j];
    }
  return SparseMatrix::from_dense(dense);
}

void BM_rref_parallel(benchmark::State& st) {
  const auto m = planted(st.range(0), st.range(0) + st.range(0) / 2, 0.05, 7);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m, Exec::parallel).rank);
}
void BM_rref_serial(benchmark::State& st) {
  const auto m = planted(st.range(0), st.range(0) + st.range(0) / 2, 0.05, 7);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m, Exec::serial).rank);
}
void BM_rref_reference(benchmark::State& st) {
  const auto m = planted(st.range(0), st.range(0) + st.range(0) / 2, 0.05, 7);
  for (auto _ : st) benchmark::DoNotOptimize(rref_reference(m).rank);
}

// Relation module of 4Ass in arity 7: orbit expansion over S_7.
void orbit(benchmark::State& st, Exec exec) {
  const auto p = builtin_presentation("4Ass");
  const ComponentBasis basis(4, 2, Level::full);
  for (auto _ : st) benchmark::DoNotOptimize(orbit_rows(p.relations, basis, exec).size());
}
void BM_orbit_parallel(benchmark::State& st) { orbit(st, Exec::parallel); }
void BM_orbit_serial(benchmark::State& st) { orbit(st, Exec::serial); }

void BM_sigma_closure_parallel(benchmark::State& st) {
  const auto p = builtin_presentation("3Ass");
  ComputeOptions o;
  o.bound = 1 << 20;
  for (auto _ : st) benchmark::DoNotOptimize(ideal_slice(p, 7, o).rank());
}
void BM_sigma_closure_serial(benchmark::State& st) {
  const auto p = builtin_presentation("3Ass");
  ComputeOptions o;
  o.bound = 1 << 20;
  o.exec = Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(ideal_slice(p, 7, o).rank());
}

}  // namespace

BENCHMARK(BM_rref_parallel)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_reference)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sigma_closure_parallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_sigma_closure_serial)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
