#include <benchmark/benchmark.h>

#include "btlab/building.hpp"
#include "btlab/simplicial.hpp"

namespace {

using namespace btlab;

void BM_TriangleComplex(benchmark::State& state) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, static_cast<unsigned>(state.range(0))), 2);
  std::size_t cells = 0;
  for (auto _ : state) {
    cells = pk_complex(b.graph(), 3).cells.size();
    benchmark::DoNotOptimize(cells);
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_TriangleComplex)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, static_cast<unsigned>(state.range(0))), 2);
  const TwoComplex c = pk_complex(b.graph(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(homology_h1(c).h1_rank);
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SimplyConnected(benchmark::State& state) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, static_cast<unsigned>(state.range(0))), 2);
  const TwoComplex c = pk_complex(b.graph(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_simply_connected(c).verdict);
}
BENCHMARK(BM_SimplyConnected)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
