#include "tbound/kernels.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace tbound;

namespace {

const P1Table& table_2_14() {
  static const P1Table t(PrimePower(2, 14));
  return t;
}

const H1Presentation& presentation_2_14() {
  static const H1Presentation p = build_presentation(table_2_14(), FieldSpec::prime(3));
  return p;
}

void set_threads(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  state.counters["threads"] = static_cast<double>(state.range(0));
}

}  // namespace

static void BM_winding_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(winding_images_serial(table_2_14(), 40));
}
static void BM_winding_omp(benchmark::State& state) {
  set_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(winding_images_omp(table_2_14(), 40));
}
BENCHMARK(BM_winding_serial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_winding_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_reduce_serial(benchmark::State& state) {
  auto imgs = winding_images_serial(table_2_14(), 60);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_batch_serial(presentation_2_14(), imgs));
}
static void BM_reduce_omp(benchmark::State& state) {
  set_threads(state);
  auto imgs = winding_images_serial(table_2_14(), 60);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_batch_omp(presentation_2_14(), imgs));
}
BENCHMARK(BM_reduce_serial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_pairs_serial(benchmark::State& state) {
  PrimePower pp(1009, 1);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_pair_scan_serial(pp, 900, 900));
}
static void BM_pairs_omp(benchmark::State& state) {
  set_threads(state);
  PrimePower pp(1009, 1);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_pair_scan_omp(pp, 900, 900));
}
BENCHMARK(BM_pairs_serial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pairs_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_sweep_serial(benchmark::State& state) {
  std::vector<PrimePower> moduli{PrimePower(101, 1), PrimePower(7, 3), PrimePower(2, 10), PrimePower(2, 11)};
  for (auto _ : state) benchmark::DoNotOptimize(path_sweep_serial(moduli, 6));
}
static void BM_sweep_omp(benchmark::State& state) {
  set_threads(state);
  std::vector<PrimePower> moduli{PrimePower(101, 1), PrimePower(7, 3), PrimePower(2, 10), PrimePower(2, 11)};
  for (auto _ : state) benchmark::DoNotOptimize(path_sweep_omp(moduli, 6));
}
BENCHMARK(BM_sweep_serial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
