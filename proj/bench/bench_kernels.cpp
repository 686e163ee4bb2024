// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <memory>

#include "qcoh/grading.hpp"
#include "qcoh/kernels.hpp"

namespace {

using namespace qcoh;

const char* kSystems[] = {"A2", "B2", "G2", "A3", "B3"};

std::shared_ptr<const QuantumRing> ring_for(int idx) {
  auto g = std::make_shared<WeylGroup>(RootSystem::build(kSystems[idx]));
  return std::make_shared<QuantumRing>(g);
}

void BM_ProductTableSerial(benchmark::State& st) {
  auto ring = ring_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(product_table_serial(*ring));
  st.SetLabel(kSystems[st.range(0)]);
}

void BM_ProductTableParallel(benchmark::State& st) {
  auto ring = ring_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(product_table_parallel(*ring));
  st.SetLabel(kSystems[st.range(0)]);
}

void BM_FiltrationScan(benchmark::State& st, bool parallel) {
  auto ring = ring_for(static_cast<int>(st.range(0)));
  ring->warm(true);
  Grader gr(ring->group_ptr(), canonical_order(ring->roots(), ParabolicSubset({0})));
  for (auto _ : st)
    benchmark::DoNotOptimize(parallel ? filtration_scan_parallel(*ring, gr) : filtration_scan_serial(*ring, gr));
  st.SetLabel(kSystems[st.range(0)]);
}

}  // namespace

BENCHMARK(BM_ProductTableSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductTableParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FiltrationScan, serial, false)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FiltrationScan, parallel, true)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
