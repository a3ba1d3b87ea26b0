#include <benchmark/benchmark.h>

#include "nswpd/exact.hpp"
#include "nswpd/generate.hpp"
#include "nswpd/newick.hpp"
#include "nswpd/pd.hpp"

namespace {

using namespace nswpd;

void BM_NswPipeline(benchmark::State& state) {
    Network net = gen_network(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 42);
    for (auto _ : state) {
        NswResult result = nsw_pipeline(net.dag());
        benchmark::DoNotOptimize(result.width);
    }
}
BENCHMARK(BM_NswPipeline)->Args({20, 3})->Args({50, 8})->Args({100, 12});

void BM_BudgetedMap(benchmark::State& state) {
    Network net = gen_network(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 42);
    CostTable costs = sample_costs(net, 42);
    long long budget = total_cost(costs) * state.range(2) / 100;
    std::vector<int> parent = nsw_pipeline(net.dag()).extension.parent_map();
    for (auto _ : state) {
        BudgetedResult result = solve_b_map_pd(net, costs, budget, parent);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_BudgetedMap)
    ->Args({50, 8, 25})
    ->Args({50, 8, 50})
    ->Args({50, 8, 90})
    ->Args({100, 12, 50});

void BM_BudgetedMaxTree(benchmark::State& state) {
    Network net = gen_network(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 42);
    CostTable costs = sample_costs(net, 42);
    long long budget = total_cost(costs) * state.range(2) / 100;
    std::vector<int> parent = nsw_pipeline(net.dag()).extension.parent_map();
    for (auto _ : state) {
        BudgetedResult result = solve_b_maxtree_pd(net, costs, budget, parent);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_BudgetedMaxTree)->Args({50, 8, 25})->Args({50, 8, 50})->Args({50, 8, 90});

void BM_MinTree(benchmark::State& state) {
    Network net = gen_network(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 42);
    std::vector<int> parent = nsw_pipeline(net.dag()).extension.parent_map();
    for (auto _ : state) {
        Rational value = compute_min_tree_pd(net, net.leaves(), parent);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_MinTree)->Args({30, 5})->Args({50, 8});

}  // namespace

BENCHMARK_MAIN();
