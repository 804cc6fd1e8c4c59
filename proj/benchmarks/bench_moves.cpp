#include <benchmark/benchmark.h>

#include <vknot/vknot.hpp>

using namespace vknot;

static void BM_RandomWalk(benchmark::State& state) {
  const auto kinds = equivalence_moves(DiagramClass::Virtual);
  const auto d = random_diagram(8, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_walk(d, kinds, static_cast<std::size_t>(state.range(0)), ++seed));
  }
}
BENCHMARK(BM_RandomWalk)->Arg(12)->Arg(100);

static void BM_EnumerateR3Sites(benchmark::State& state) {
  Rng rng(5);
  const auto d = plant_triangle(random_diagram(static_cast<std::size_t>(state.range(0)), rng),
                                MoveKind::R3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_sites(d, MoveKind::R3));
  }
}
BENCHMARK(BM_EnumerateR3Sites)->Arg(8)->Arg(32);
