#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/metrics.hpp"
#include "gfp/sampling.hpp"
#include "gfp/synthesis.hpp"

using namespace gfp;

namespace {

const Graph& cached_graph(std::size_t n) {
    static std::map<std::size_t, Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, barabasi_albert({n, 3}, 42)).first;
    return it->second;
}

}  // namespace

static void BM_BuildGraph(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto& g = cached_graph(n);
    std::vector<RawEdge> edges;
    edges.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.node_count(); ++i)
        for (const auto j : g.neighbors(static_cast<Graph::NodeId>(i)))
            if (j > i) edges.emplace_back(static_cast<std::int64_t>(i), j);
    for (auto _ : state) {
        auto built = build_graph(edges);
        benchmark::DoNotOptimize(built.graph.edge_count());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * edges.size());
}
BENCHMARK(BM_BuildGraph)->Arg(10000)->Arg(100000);

static void BM_Report(benchmark::State& state) {
    const auto& g = cached_graph(static_cast<std::size_t>(state.range(0)));
    const auto x = synthesize_correlated(g, {0.5, 1, std::nullopt});
    const unsigned threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto report = gfp_report(g, x, threads);
        benchmark::DoNotOptimize(report.f_gap);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(g.edge_count()));
}
BENCHMARK(BM_Report)->Args({10000, 1})->Args({100000, 1})->Args({100000, 0});

static void BM_Grid(benchmark::State& state) {
    const auto& g = cached_graph(static_cast<std::size_t>(state.range(0)));
    const auto x = synthesize_correlated(g, {0.5, 1, std::nullopt});
    std::vector<double> kv, xv;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        kv.push_back(static_cast<double>(g.degree(static_cast<Graph::NodeId>(i))));
        xv.push_back(x.value(i));
    }
    const auto k_edges = default_bin_edges(kv, BinPolicy::Log2);
    const auto x_edges = default_bin_edges(xv, BinPolicy::Log2);
    for (auto _ : state) {
        auto grid = paradox_probability_grid(g, x, k_edges, x_edges);
        benchmark::DoNotOptimize(grid.total_holds());
    }
}
BENCHMARK(BM_Grid)->Arg(10000)->Arg(100000);

static void BM_SampleGroups(benchmark::State& state) {
    const auto& g = cached_graph(10000);
    const auto x = synthesize_correlated(g, {0.9, 1, std::nullopt});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto groups = sample_groups(g, x, 5000, seed++);
        benchmark::DoNotOptimize(groups.biased.back());
    }
}
BENCHMARK(BM_SampleGroups);

static void BM_Synthesize(benchmark::State& state) {
    const auto& g = cached_graph(static_cast<std::size_t>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto x = synthesize_correlated(g, {0.5, seed++, std::nullopt});
        benchmark::DoNotOptimize(x.value(0));
    }
}
BENCHMARK(BM_Synthesize)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
