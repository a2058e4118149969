#include <benchmark/benchmark.h>

#include "crlab/families.hpp"
#include "crlab/online.hpp"
#include "crlab/refine.hpp"
#include "crlab/setcover.hpp"

using namespace crlab;

namespace {

const char* const kPolicies[] = {"stack", "queue", "pq-min", "pq-max", "smallest-stack", "hybrid:4"};

void worklist_on_family(benchmark::State& state, FamilyKind kind) {
  Family f = build_family(kind, static_cast<int>(state.range(0)));
  const PolicySpec pol = parse_policy(kPolicies[state.range(1)]);
  const Partition init = initial_partition(f.graph);
  RefineOptions o;
  o.record_trace = false;
  std::int64_t cost = 0;
  for (auto _ : state) {
    RefinementReport r = refine_worklist(f.graph, init, pol, o);
    cost = r.total_cost;
    benchmark::DoNotOptimize(cost);
  }
  state.SetLabel(pol.name());
  state.counters["cost_per_edge"] = static_cast<double>(cost) / f.graph.edge_count();
  state.counters["edges"] = static_cast<double>(f.graph.edge_count());
}

void BM_StackAdv(benchmark::State& s) { worklist_on_family(s, FamilyKind::StackAdv); }
void BM_QueueAdv(benchmark::State& s) { worklist_on_family(s, FamilyKind::QueueAdv); }
void BM_Concealer(benchmark::State& s) { worklist_on_family(s, FamilyKind::Concealer); }

void BM_FastOracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Family f = build_family(FamilyKind::Concealer, k);
  const Partition init = initial_partition(f.graph);
  StrategyOptions o;
  o.record_trace = false;
  o.check = EquitableCheck::OnTerminate;
  for (auto _ : state) {
    FastOracleStrategy s(f.desc);
    benchmark::DoNotOptimize(refine_strategy(f.graph, init, s, o).total_cost);
  }
}

void BM_NaiveStable(benchmark::State& state) {
  Family f = build_family(FamilyKind::StackAdv, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(naive_stable(f.graph).class_count());
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_family(FamilyKind::QueueAdv, static_cast<int>(state.range(0))).graph.edge_count());
}

void BM_PartialQuotient(benchmark::State& state) {
  Gadget g = build_concealer(3, 1);
  ColoredGraph cg = g.graph(individualize_in_pairs(g, {0}));
  Partition p = naive_stable(cg);
  for (auto _ : state) benchmark::DoNotOptimize(partial_quotient(cg, p).node_count());
}

void BM_SetCoverSearch(benchmark::State& state) {
  SetCoverInstance inst = parse_instance("u a b c d\ns d\ns b c d\ns a b\ns a c\n");
  Reduction r = reduce_setcover(inst, 64);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_optimal_sequence(r.graph, initial_partition(r.graph), 16).cost);
}

void policy_grid(benchmark::internal::Benchmark* b) {
  for (int k : {6, 8, 10})
    for (int p = 0; p < 6; ++p) b->Args({k, p});
}

}  // namespace

BENCHMARK(BM_StackAdv)->Apply(policy_grid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QueueAdv)->Apply(policy_grid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Concealer)->Apply(policy_grid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastOracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveStable)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialQuotient);
BENCHMARK(BM_SetCoverSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
