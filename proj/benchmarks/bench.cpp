#include <benchmark/benchmark.h>

#include <random>

#include "openbook/solver.hpp"

using namespace openbook;

namespace {

ResolutionGraph path_graph(const std::vector<int>& weights) {
    ResolutionGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) g.weights[static_cast<int>(i) + 1] = weights[i];
    for (std::size_t i = 1; i < weights.size(); ++i)
        g.edges.insert({static_cast<int>(i), static_cast<int>(i) + 1});
    return g;
}

ResolutionGraph random_tree(int n, unsigned seed) {
    std::mt19937 rng(seed);
    ResolutionGraph g;
    for (int v = 1; v <= n; ++v) g.weights[v] = -8;
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + static_cast<int>(rng() % (v - 1));
        g.edges.insert({parent, v});
    }
    return g;
}

}  // namespace

static void BM_arrange(benchmark::State& state) {
    ResolutionGraph g = random_tree(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(arrange_conveniently(g));
}
BENCHMARK(BM_arrange)->Arg(16)->Arg(64);

static void BM_standard_profile(benchmark::State& state) {
    ResolutionGraph g = random_tree(static_cast<int>(state.range(0)), 11);
    PlanarPage page = build_page(g, arrange_conveniently(g));
    Factorization f = standard_factorization(page);
    for (auto _ : state) benchmark::DoNotOptimize(profile(f, page.hole_ids()));
}
BENCHMARK(BM_standard_profile)->Arg(8)->Arg(16);

static void BM_enumerate(benchmark::State& state) {
    std::vector<int> weights(static_cast<std::size_t>(state.range(0)), -5);
    ResolutionGraph g = path_graph(weights);
    PlanarPage page = build_page(g, arrange_conveniently(g));
    MultiplicityProfile target = profile(standard_factorization(page), page.hole_ids());
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_candidates(page.hole_ids(), target, {}));
}
BENCHMARK(BM_enumerate)->Arg(1)->Arg(2);

static void BM_lantern_orbit(benchmark::State& state) {
    ResolutionGraph g = path_graph({-5, -4});
    PlanarPage page = build_page(g, arrange_conveniently(g));
    Factorization f = standard_factorization(page);
    for (auto _ : state) benchmark::DoNotOptimize(lantern_orbit(f, 4096));
}
BENCHMARK(BM_lantern_orbit);

BENCHMARK_MAIN();
