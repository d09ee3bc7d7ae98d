#include <benchmark/benchmark.h>

#include "uncover/asymptotics.hpp"
#include "uncover/exact.hpp"
#include "uncover/rng.hpp"
#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

namespace {

void BM_SampleUniformTree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    uncover::RngStream rng(1, 0);
    for (auto _ : state) {
        uncover::LabeledTree t = uncover::sample_uniform_tree(n, rng);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleUniformTree)->Arg(100)->Arg(1000)->Arg(10000);

void BM_UncoverPath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    uncover::RngStream rng(2, 0);
    uncover::LabeledTree t = uncover::sample_uniform_tree(n, rng);
    for (auto _ : state) {
        uncover::UncoverPath p = uncover::uncover_path(t);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UncoverPath)->Arg(100)->Arg(1000)->Arg(10000);

void BM_IncrementalClusters(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    uncover::RngStream rng(3, 0);
    uncover::LabeledTree t = uncover::sample_uniform_tree(n, rng);
    for (auto _ : state) {
        uncover::IncrementalUncover inc(t);
        inc.advance(n / 2);
        benchmark::DoNotOptimize(inc.largest());
    }
    state.SetItemsProcessed(state.iterations() * (n / 2));
}
BENCHMARK(BM_IncrementalClusters)->Arg(1000)->Arg(10000);

void BM_RecursiveModelSampler(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    uncover::RngStream rng(4, 0);
    for (auto _ : state) {
        uncover::UncoverPath p = uncover::recursive_model_sampler(n, rng);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RecursiveModelSampler)->Arg(1000)->Arg(10000);

void BM_RootClusterPmf(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        uncover::BigRat p = uncover::root_cluster_pmf(n, n / 2, n / 8);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_RootClusterPmf)->Arg(50)->Arg(200)->Arg(1000);

void BM_RootClusterPmfLog(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        double p = uncover::root_cluster_pmf_log(n, n / 2, n / 8);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_RootClusterPmfLog)->Arg(50)->Arg(1000)->Arg(100000);

void BM_Kappa(benchmark::State& state) {
    double c = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(uncover::kappa(c));
        c = c < 8.0 ? c + 0.1 : 0.1;
    }
}
BENCHMARK(BM_Kappa);

void BM_LargestComponentTailLimit(benchmark::State& state) {
    // alpha = 0.35 needs the two-term series with adaptive quadrature
    for (auto _ : state) {
        benchmark::DoNotOptimize(uncover::largest_component_tail_limit(1.0, 0.35));
    }
}
BENCHMARK(BM_LargestComponentTailLimit);

}  // namespace

BENCHMARK_MAIN();
