#include <benchmark/benchmark.h>

#include "chromind/claims.hpp"
#include "chromind/coloring.hpp"
#include "chromind/graph.hpp"
#include "chromind/indices.hpp"
#include "chromind/oracle.hpp"

using namespace chromind;

static void BM_BuildBlossom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Graph g = build({Family::blossom, n});
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_BuildBlossom)->Arg(6)->Arg(12);

static void BM_ChromaticNumber(benchmark::State& state) {
    Graph g = build({Family::closed_sunflower, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(6)->Arg(9);

static void BM_PhiMinus(benchmark::State& state) {
    Graph g = build({Family::sunflower, static_cast<int>(state.range(0))});
    int k = chromatic_number(g);
    for (auto _ : state) benchmark::DoNotOptimize(phi_minus(g, k).zeta.size());
}
BENCHMARK(BM_PhiMinus)->Arg(5)->Arg(7);

static void BM_CountColorings(benchmark::State& state) {
    Graph g = build({Family::flower, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(count_colorings(g, 4));
}
BENCHMARK(BM_CountColorings)->Arg(5)->Arg(6);

static void BM_ExtremaM1Min(benchmark::State& state) {
    Graph g = build({Family::closed_sunflower, static_cast<int>(state.range(0))});
    int k = chromatic_number(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(extrema(g, k, OracleIndex::m1, Goal::min).value.num);
}
BENCHMARK(BM_ExtremaM1Min)->Arg(6)->Arg(8);

static void BM_Bundle(benchmark::State& state) {
    Graph g = build({Family::blossom, 6});
    Coloring w = witness_coloring({Family::blossom, 6}, Variant::minus, Index::m1);
    for (auto _ : state) benchmark::DoNotOptimize(bundle(g, w).m2);
}
BENCHMARK(BM_Bundle);

static void BM_VerifyWitnessSemantics(benchmark::State& state) {
    for (auto _ : state) {
        VerifyOptions opt;
        opt.theorems = {"2.1", "3.1"};
        opt.n_min = 4;
        opt.n_max = 6;
        opt.semantics = Semantics::witness;
        benchmark::DoNotOptimize(verify(opt).size());
    }
}
BENCHMARK(BM_VerifyWitnessSemantics);

BENCHMARK_MAIN();
