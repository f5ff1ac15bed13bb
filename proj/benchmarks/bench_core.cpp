#include <benchmark/benchmark.h>

#include "modlex/datasets.hpp"
#include "modlex/dp_engine.hpp"

namespace {

using namespace modlex;

void BM_IsIsometricCycleArc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = cycle_graph(n);
  VertexSet arc(n);
  for (Vertex v = 0; v <= n / 2; ++v) arc.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(is_isometric(g, arc));
}
BENCHMARK(BM_IsIsometricCycleArc)->Arg(16)->Arg(32)->Arg(64);

void BM_NdpSetCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ndp_set(g));
}
BENCHMARK(BM_NdpSetCycle)->Arg(7)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_NdpSetFig3(benchmark::State& state) {
  const Graph g = load_dataset("fig3").graph;
  for (auto _ : state) benchmark::DoNotOptimize(ndp_set(g));
}
BENCHMARK(BM_NdpSetFig3)->Unit(benchmark::kMillisecond);

void BM_MaximalPartitionFig3(benchmark::State& state) {
  const Graph g = load_dataset("fig3").graph;
  for (auto _ : state) benchmark::DoNotOptimize(maximal_modular_partition(g));
}
BENCHMARK(BM_MaximalPartitionFig3)->Unit(benchmark::kMicrosecond);

void BM_CertifyFig3ViaDecomposition(benchmark::State& state) {
  const Graph g = load_dataset("fig3").graph;
  for (auto _ : state) benchmark::DoNotOptimize(certify_dp_via_decomposition(g));
}
BENCHMARK(BM_CertifyFig3ViaDecomposition)->Unit(benchmark::kMillisecond);

void BM_SdpOrderGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = cartesian_product(path_graph(n), path_graph(n)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(sdp_order(g));
}
BENCHMARK(BM_SdpOrderGrid)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SdpOrderCycleRejected(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdp_order(g));
}
BENCHMARK(BM_SdpOrderCycleRejected)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
