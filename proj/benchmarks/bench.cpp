// Microbenchmarks over the exact-arithmetic core.  Times are dominated by
// GMP rational work, so these mostly track how much exact arithmetic each
// layer performs per call.

#include <benchmark/benchmark.h>

#include "metallic/averages.hpp"
#include "metallic/coding.hpp"
#include "metallic/geometry.hpp"
#include "metallic/induction.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/tiles.hpp"

using namespace metallic;

namespace {

TorusPoint sample_point(int n) {
  return {QuadNum::rational(Rat(355, 1130), n),
          QuadNum::rational(Rat(277, 1000), n)};
}

void bm_chip_tiles(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chip_tiles(n));
}

void bm_tile_at(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TorusPoint p = sample_point(n);
  for (auto _ : state) benchmark::DoNotOptimize(tile_at(n, p.x, p.y));
}

void bm_window_15x15(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TorusPoint p = sample_point(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(make_window(n, p, -7, -7, 15, 15));
}

void bm_side_partitions(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_partitions(n));
}

void bm_refined_partition(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SidePartitions sides = build_partitions(n);
  for (auto _ : state) {
    Refinement r = refine(sides.east, sides.north);
    r = refine(r.partition, sides.west);
    r = refine(r.partition, sides.south);
    benchmark::DoNotOptimize(r);
  }
}

void bm_selfsim_pipeline(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(self_similarity(n));
}

void bm_phi_estimate(benchmark::State& state) {
  int n = 2;
  TorusPoint p = sample_point(n);
  long k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(phi_estimate(n, p, k, Axis::row));
}

BENCHMARK(bm_chip_tiles)->Arg(1)->Arg(3)->Arg(8);
BENCHMARK(bm_tile_at)->Arg(1)->Arg(3)->Arg(8);
BENCHMARK(bm_window_15x15)->Arg(1)->Arg(3);
BENCHMARK(bm_side_partitions)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK(bm_refined_partition)->Arg(1)->Arg(3);
BENCHMARK(bm_selfsim_pipeline)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_phi_estimate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
