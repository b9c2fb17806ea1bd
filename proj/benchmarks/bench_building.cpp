#include <benchmark/benchmark.h>

#include <set>

#include "btlab/building.hpp"
#include "btlab/prints.hpp"
#include "btlab/replica.hpp"

namespace {

using namespace btlab;

void BM_GenerateBall(benchmark::State& state) {
  const auto params = BuildingParams::make(2, static_cast<unsigned>(state.range(0)));
  const auto radius = static_cast<unsigned>(state.range(1));
  std::size_t vertices = 0;
  for (auto _ : state) {
    const BuildingBall b = generate_ball(params, radius);
    vertices = b.size();
    benchmark::DoNotOptimize(vertices);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
}
BENCHMARK(BM_GenerateBall)->Args({2, 6})->Args({3, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_Neighbors(benchmark::State& state) {
  const auto params = BuildingParams::make(2, static_cast<unsigned>(state.range(0)));
  const NeighborGenerator generator(params);
  const BuildingBall b = generate_ball(params, 2);
  const LatticeClass& far = b.vertex(static_cast<VertexId>(b.size() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(generator.neighbors(far));
}
BENCHMARK(BM_Neighbors)->Arg(2)->Arg(3)->Arg(4);

void BM_PrintRoundTrip(benchmark::State& state) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 4), 2);
  std::vector<VertexId> interior;
  for (VertexId v = 0; v < b.size(); ++v) {
    if (b.is_interior(v)) interior.push_back(v);
  }
  for (auto _ : state) {
    for (VertexId v : interior) benchmark::DoNotOptimize(source_of(b, print_of(b, v).members));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * interior.size()));
}
BENCHMARK(BM_PrintRoundTrip);

void BM_Replica(benchmark::State& state) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 3);
  for (auto _ : state) {
    const ReplicaGraph r = build_replica(b, std::set<int>{0});
    benchmark::DoNotOptimize(verify_replica(b, r).ok);
  }
}
BENCHMARK(BM_Replica)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
