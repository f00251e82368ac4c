#include <benchmark/benchmark.h>

#include "neumaier/cayley.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/graph.hpp"

using namespace neumaier;

namespace {

struct Case {
  std::uint64_t q, p, a;
};

// Table rows of increasing size: v = 65, 1220, 3892, 9850, 16609.
constexpr Case kCases[] = {{5, 13, 2}, {5, 61, 17}, {7, 139, 26}, {5, 197, 3}, {17, 977, 23}};

void BM_GammaPq(benchmark::State& state) {
  const Case c = kCases[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(cayley::gamma_pq({c.p, c.q, c.a}));
}
BENCHMARK(BM_GammaPq)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ConstructAndVerify(benchmark::State& state) {
  const Case c = kCases[state.range(0)];
  const auto built = cayley::construct_neumaier(c.q, c.p, c.a);
  state.counters["v"] = static_cast<double>(built.params.v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph::verify_neumaier(built.fused.graph, built.params, built.witness));
  }
}
BENCHMARK(BM_ConstructAndVerify)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RegularityReport(benchmark::State& state) {
  const Case c = kCases[state.range(0)];
  const auto built = cayley::construct_neumaier(c.q, c.p, c.a);
  for (auto _ : state) benchmark::DoNotOptimize(graph::regularity_report(built.fused.graph));
}
BENCHMARK(BM_RegularityReport)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CommonNeighbours(benchmark::State& state) {
  const auto built = cayley::construct_neumaier(17, 977, 23);
  const auto& g = built.fused.graph;
  graph::Vertex u = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.common_neighbours(u, (u * 7919 + 1) % g.order()));
    u = (u + 1) % g.order();
  }
}
BENCHMARK(BM_CommonNeighbours);

void BM_CountDirect(benchmark::State& state) {
  const Case c = kCases[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(charsums::count_direct(c.p, c.q, c.a));
}
BENCHMARK(BM_CountDirect)->DenseRange(0, 4);

void BM_CountJacobi(benchmark::State& state) {
  const Case c = kCases[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(charsums::count_jacobi(c.p, c.q, c.a));
}
BENCHMARK(BM_CountJacobi)->DenseRange(0, 4);

void BM_CountLargeExample(benchmark::State& state) {
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(charsums::count_direct(817519, 247, 22890547));
    } else if (state.range(0) == 1) {
      benchmark::DoNotOptimize(charsums::count_jacobi(817519, 247, 22890547));
    } else {
      benchmark::DoNotOptimize(charsums::count_closed(817519, 247, 22890547));
    }
  }
}
BENCHMARK(BM_CountLargeExample)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateFeasible(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(feasibility::enumerate_feasible(state.range(0)));
}
BENCHMARK(BM_EnumerateFeasible)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
