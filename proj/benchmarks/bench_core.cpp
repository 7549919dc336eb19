#include <tmkit/disjoint_paths.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/planar.hpp>
#include <tmkit/random.hpp>
#include <tmkit/separators.hpp>
#include <tmkit/solver.hpp>
#include <tmkit/tmc_brute.hpp>
#include <tmkit/treewidth.hpp>
#include <tmkit/twdp.hpp>

#include <benchmark/benchmark.h>

using namespace tmkit;

namespace
{
    auto hosts(int n, int k, int count, std::uint64_t seed) -> std::vector<RootedGraph>
    {
        Rng rng(seed);
        std::vector<RootedGraph> out;
        for (int i = 0 ; i < count ; ++i)
            out.emplace_back(random_partial_ktree(n, k, 2, 3, rng));
        return out;
    }
}

static void treewidth_grid(benchmark::State & state)
{
    auto g = generate_grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    Ceilings wide;
    wide.treewidth_vertices = 40;
    for (auto _ : state)
        benchmark::DoNotOptimize(treewidth(g, wide).width);
}
BENCHMARK(treewidth_grid)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void treewidth_partial_ktree(benchmark::State & state)
{
    auto gs = hosts(16, static_cast<int>(state.range(0)), 8, 5);
    for (auto _ : state)
        for (auto & g : gs)
            benchmark::DoNotOptimize(treewidth(g.graph()).width);
}
BENCHMARK(treewidth_partial_ktree)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void tmc_dp_k4(benchmark::State & state)
{
    auto gs = hosts(static_cast<int>(state.range(0)), 3, 8, 7);
    std::vector<NiceTreeDecomposition> ntds;
    for (auto & g : gs)
        ntds.push_back(nice_decomposition(g.graph()));
    RootedGraph h(complete_graph(4));
    for (auto _ : state)
        for (std::size_t i = 0 ; i < gs.size() ; ++i)
            benchmark::DoNotOptimize(tmc_dp(gs[i], h, ntds[i]).has_value());
}
BENCHMARK(tmc_dp_k4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void tmc_brute_k4(benchmark::State & state)
{
    auto gs = hosts(static_cast<int>(state.range(0)), 3, 8, 7);
    RootedGraph h(complete_graph(4));
    for (auto _ : state)
        for (auto & g : gs)
            benchmark::DoNotOptimize(tmc_brute(g, h).has_value());
}
BENCHMARK(tmc_brute_k4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void folio_dp_vs_brute(benchmark::State & state)
{
    Rng rng(11);
    auto g = random_rooted(random_partial_ktree(9, 2, 2, 3, rng), 2, rng);
    auto ntd = nice_decomposition(g.graph());
    bool dp = state.range(0) == 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(dp ? folio_dp(g, 2, ntd).entries.size() : extended_folio_brute(g, 2).entries.size());
    state.SetLabel(dp ? "dp" : "brute");
}
BENCHMARK(folio_dp_vs_brute)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void important_separators(benchmark::State & state)
{
    int side = 6;
    auto g = generate_grid(side, side);
    std::vector<Vertex> x{ 0 }, y{ side * side - 1 };
    int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_important(g, x, y, k).size());
}
BENCHMARK(important_separators)->DenseRange(2, 5);

static void disjoint_paths_grid(benchmark::State & state)
{
    int n = static_cast<int>(state.range(0));
    auto g = generate_grid(n, n);
    DisjointPathsInstance inst{ g, { { grid_vertex(n, 0, 0), grid_vertex(n, n - 1, n - 1) }, { grid_vertex(n, 0, n - 1), grid_vertex(n, n - 1, 0) } } };
    Ceilings wide;
    wide.disjoint_paths_vertices = 200;
    for (auto _ : state)
        benchmark::DoNotOptimize(disjoint_paths_brute(inst, wide).has_value());
}
BENCHMARK(disjoint_paths_grid)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void irrelevant_vertex_grid(benchmark::State & state)
{
    int r = static_cast<int>(state.range(0));
    int n = 2 * r + 5;
    auto eg = embedded_grid(n, n);
    DisjointPathsInstance inst{ eg.graph(), { { grid_vertex(n, 0, 0), grid_vertex(n, n - 1, n - 1) } } };
    for (auto _ : state)
        benchmark::DoNotOptimize(dp_irrelevant_vertex(eg, inst, r).has_value());
}
BENCHMARK(irrelevant_vertex_grid)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void tm_deletion(benchmark::State & state)
{
    Rng rng(17);
    std::vector<DeletionInstance> insts;
    for (int i = 0 ; i < 10 ; ++i)
        insts.push_back({ RootedGraph(random_graph(9, 2, 5, rng)), { complete_graph(3) }, 2, 3 });
    SolverConfig cfg;
    cfg.memo = state.range(0) == 1;
    for (auto _ : state)
        for (auto & inst : insts)
            benchmark::DoNotOptimize(solve(inst, cfg).solution.has_value());
    state.SetLabel(cfg.memo ? "memo" : "no memo");
}
BENCHMARK(tm_deletion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
