#include <benchmark/benchmark.h>

#include <vknot/vknot.hpp>

using namespace vknot;

static void BM_VPolys(benchmark::State& state) {
  const auto d = random_diagram(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_polys(d));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VPolys)->RangeMultiplier(2)->Range(4, 256)->Complexity();

static void BM_StandardPairings(benchmark::State& state) {
  const auto d = random_diagram(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(standard_pairings(d));
  }
}
BENCHMARK(BM_StandardPairings)->DenseRange(4, 12, 4);

static void BM_SemanticCounts(benchmark::State& state) {
  const auto d = random_diagram(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pattern_counts_semantic(d));
  }
}
BENCHMARK(BM_SemanticCounts)->DenseRange(4, 12, 4);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_diagram(static_cast<std::size_t>(state.range(0)), [&](const GaussDiagram& d) {
      count += v_polys(d).v1.term_count();
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
  const auto f = parse_poly("3*t^5-2*t^2+t-4*t^-3");
  const auto g = parse_poly("-t^4+2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize(f, g));
  }
}
BENCHMARK(BM_Realize);
