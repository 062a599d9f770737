#include <benchmark/benchmark.h>

#include <maxcurve/analysis.hpp>
#include <maxcurve/constructions.hpp>
#include <maxcurve/matrix.hpp>

using namespace maxcurve;

static void BM_VandermondeRank(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const NodeSet x = principal_lattice(n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(vandermonde(x, n)));
}
BENCHMARK(BM_VandermondeRank)->DenseRange(2, 10, 2);

static void BM_ChungYao(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(chung_yao(random_general_position_lines(n, 1)));
}
BENCHMARK(BM_ChungYao)->DenseRange(2, 10, 2);

static void BM_CertifyGcChungYao(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ChungYaoSet cy = chung_yao(random_general_position_lines(n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(certify_gc(cy.nodes, n));
}
BENCHMARK(BM_CertifyGcChungYao)->DenseRange(2, 6, 2);

static void BM_MaximalLines(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const NodeSet x = principal_lattice(n);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_lines(x, n));
}
BENCHMARK(BM_MaximalLines)->DenseRange(2, 6, 2);
BENCHMARK_MAIN();
