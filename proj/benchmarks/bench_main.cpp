#include <benchmark/benchmark.h>

#include "fsgraph/construction.hpp"
#include "fsgraph/explorer.hpp"
#include "fsgraph/solvers.hpp"

namespace {

void BM_NeighborGeneration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    fsg::FsContext ctx(fsg::make_named(fsg::Family::cycle, n),
                       fsg::make_named(fsg::Family::star, n));
    auto sigma = fsg::identity_configuration(n);
    for (auto _ : state) {
        auto nb = fsg::neighbors(ctx, sigma);
        benchmark::DoNotOptimize(nb);
    }
}
BENCHMARK(BM_NeighborGeneration)->Arg(6)->Arg(10)->Arg(16);

void BM_ComponentBFS(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    fsg::FsContext ctx(fsg::make_named(fsg::Family::path, n),
                       fsg::make_named(fsg::Family::complete, n));
    for (auto _ : state) {
        auto comp = fsg::materialize_component(ctx, fsg::identity_configuration(n));
        benchmark::DoNotOptimize(comp);
    }
}
BENCHMARK(BM_ComponentBFS)->Arg(5)->Arg(6)->Arg(7);

void BM_ExactDiameter(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    fsg::FsContext ctx(fsg::make_named(fsg::Family::path, n),
                       fsg::make_named(fsg::Family::complete, n));
    auto comp = fsg::materialize_component(ctx, fsg::identity_configuration(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fsg::diameter_of(comp, 1));
    }
}
BENCHMARK(BM_ExactDiameter)->Arg(5)->Arg(6);

void BM_OneLayerExtraction(benchmark::State& state) {
    auto lc = fsg::build_construction(1);
    for (auto _ : state) {
        auto prog = fsg::one_layer_extraction(lc, 1);
        benchmark::DoNotOptimize(prog);
    }
}
BENCHMARK(BM_OneLayerExtraction);

void BM_PathSort(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto y = fsg::make_named(fsg::Family::complete, n);
    auto sigma = fsg::identity_configuration(n);
    auto tau = sigma;
    std::reverse(tau.map.begin(), tau.map.end());
    for (auto _ : state) {
        auto seq = fsg::path_sort(y, sigma, tau);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_PathSort)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
