// Serial versus OpenMP kernels. Set OMP_NUM_THREADS to vary the thread count.

#include "ellarr/cohomology.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ellarr;

namespace {

ArrangementSpec braid(std::size_t m) {
  ArrangementSpec spec{m, {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Divisor d;
      d.coeffs.assign(m, 0);
      d.coeffs[i] = 1;
      d.coeffs[j] = -1;
      d.translation = {0, 0};
      spec.divisors.push_back(d);
    }
  return spec;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_HodgeTable(benchmark::State& state) {
  const Dga dga(Arrangement::validate(braid(static_cast<std::size_t>(state.range(1)))));
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_table(dga, exec));
}

void BM_HodgeTableReference(benchmark::State& state) {
  const Dga dga(Arrangement::validate(braid(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(hodge_table_serial(dga));
}

void BM_RankRational(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m, exec));
}

}  // namespace

BENCHMARK(BM_HodgeTable)->ArgNames({"parallel", "m"})->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HodgeTableReference)->ArgName("m")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRational)->ArgNames({"parallel", "n"})->ArgsProduct({{0, 1}, {64, 128}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
