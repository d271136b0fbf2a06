#include "zdcode/lincode.hpp"
#include "zdcode/theorems.hpp"
#include "zdcode/zdgraph.hpp"

#include <benchmark/benchmark.h>

using namespace zdcode;

static void BM_BuildGraph(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    for (auto _ : state) {
        Graph g = build_graph(n);
        benchmark::DoNotOptimize(g.edges.data());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(30)->Arg(210)->Arg(2310)->Arg(9240);

static void BM_Rref(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    const std::uint16_t p = state.range(1);
    Graph g = build_graph(n);
    GfMatrix m = incidence_matrix(g, p);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r.rank());
    }
}
BENCHMARK(BM_Rref)->Args({210, 2})->Args({210, 3})->Args({630, 2})->Args({630, 3});

static void BM_Mincut(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    Graph g = build_graph(n);
    for (auto _ : state) {
        MinCut c = edge_connectivity_mincut(g);
        benchmark::DoNotOptimize(c.lambda);
    }
}
BENCHMARK(BM_Mincut)->Arg(60)->Arg(210)->Arg(462);

static void BM_MinDistanceExact(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    const std::uint16_t p = state.range(1);
    GfMatrix m = incidence_matrix(build_graph(n), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance_exact(m));
    }
}
BENCHMARK(BM_MinDistanceExact)->Args({69, 2})->Args({55, 3})->Args({35, 5});

static void BM_MinDistanceBounds(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    const std::uint16_t p = state.range(1);
    GfMatrix m = incidence_matrix(build_graph(n), p);
    for (auto _ : state) {
        DistanceBounds b = min_distance_bounds(m);
        benchmark::DoNotOptimize(b.lo);
    }
}
BENCHMARK(BM_MinDistanceBounds)->Args({385, 2})->Args({385, 3})->Args({995, 2});

static void BM_Verify(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    const std::uint16_t p = state.range(1);
    for (auto _ : state) {
        VerifyReport r = verify(n, p);
        benchmark::DoNotOptimize(r.has_mismatch());
    }
}
BENCHMARK(BM_Verify)->Args({15, 2})->Args({30, 2})->Args({210, 2});

BENCHMARK_MAIN();
