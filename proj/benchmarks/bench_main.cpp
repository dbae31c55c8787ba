#include <benchmark/benchmark.h>

#include "caconn/connectivity.hpp"
#include "caconn/exact.hpp"
#include "caconn/generators.hpp"
#include "caconn/matroid.hpp"
#include "caconn/sparsify.hpp"

using namespace caconn;

namespace {

void BM_EcaCheck(benchmark::State& state) {
  EdgeColoredGraph g = gen_eca_maximal(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_eca_connected(g).holds);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EcaCheck)->Range(64, 4096)->Complexity();

void BM_IvcaCheck(benchmark::State& state) {
  VertexColoredGraph g = gen_ivca_min(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ivca_connected(g).holds);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IvcaCheck)->Range(64, 4096)->Complexity();

void BM_EcaSparsify(benchmark::State& state) {
  // n-1 divisible by k-1 = 3 along this range.
  EcaTightRatioInstance inst =
      gen_eca_tight_ratio(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eca_sparsify(inst.graph, inst.adversarial_order).selected.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EcaSparsify)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_VcaSparsify(benchmark::State& state) {
  VcaTightRatioInstance inst =
      gen_vca_tight_ratio(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vca_sparsify(inst.graph, inst.adversarial_order).selected.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VcaSparsify)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_IvcaSparsify(benchmark::State& state) {
  // n = 3 mod 6 along this range.
  IvcaTightRatioInstance inst =
      gen_ivca_tight_ratio(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ivca_sparsify(inst.graph, inst.adversarial_order).selected.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IvcaSparsify)->Arg(63)->Arg(255)->Arg(1023)->Complexity();

void BM_CourteousRestriction(benchmark::State& state) {
  EcaTightRatioInstance inst =
      gen_eca_tight_ratio(4, static_cast<int>(state.range(0)));
  ColoredMatroid m = graphic_matroid(inst.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        courteous_restriction(m, inst.adversarial_order.edge_order)
            .selected.size());
  }
  state.counters["oracle_calls_per_iter"] = benchmark::Counter(
      static_cast<double>(m.oracle_calls()),
      benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_CourteousRestriction)->Arg(64)->Arg(256);

void BM_ExactTightFamily(benchmark::State& state) {
  EcaTightRatioInstance inst = gen_eca_tight_ratio(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_subgraph_exact(inst.graph).optimum_size);
  }
}
BENCHMARK(BM_ExactTightFamily);

}  // namespace

BENCHMARK_MAIN();
