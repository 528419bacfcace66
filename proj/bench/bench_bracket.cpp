// Bracket kernels: serial state sum, OpenMP state sum, memoised sweep.
#include <benchmark/benchmark.h>

#include "lensball/bracket.hpp"

using namespace lensball;

namespace {

// Standard (2,n) torus link diagram: n crossings in a twist region.
PDCode torus_2n(int n) {
  PDCode d;
  std::vector<int> c;
  for (int i = 0; i < n; ++i) c.push_back(d.add_crossing(true));
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    d.connect(PDCode::he(c[i], 1), PDCode::he(c[j], 0));
    d.connect(PDCode::he(c[i], 2), PDCode::he(c[j], 3));
  }
  return d;
}

void BM_StateSumSerial(benchmark::State& st) {
  const PDCode d = torus_2n(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bracket_state_sum_serial(d));
}

void BM_StateSumParallel(benchmark::State& st) {
  const PDCode d = torus_2n(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bracket_state_sum_parallel(d));
}

void BM_Sweep(benchmark::State& st) {
  const PDCode d = torus_2n(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kauffman_bracket(d));
}

}  // namespace

BENCHMARK(BM_StateSumSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateSumParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
