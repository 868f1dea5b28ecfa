#include "webfoam/cohomology.hpp"
#include "webfoam/foam.hpp"
#include "webfoam/link.hpp"
#include "webfoam/relations.hpp"
#include "webfoam/symmetric.hpp"
#include "webfoam/web.hpp"

#include <benchmark/benchmark.h>

using namespace webfoam;

static void BM_QBinom(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(qbinom(n, n / 2));
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16)->Arg(32);

static void BM_Mult3(benchmark::State& st) {
    const int a = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(mult3({a, a - 1, 0}, {a, 1, 1}));
}
BENCHMARK(BM_Mult3)->Arg(2)->Arg(4);

static void BM_GrassDuality(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    GrassRing g(N, 3);
    for (auto _ : st) {
        mpq_class sum = 0;
        for (const auto& mu : g.basis()) sum += g.trace(g.reduce(SchurSum(mu) * g.dual(mu)));
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_GrassDuality)->Arg(5)->Arg(7);

static void BM_Potential(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(potential(N, 3));
}
BENCHMARK(BM_Potential)->Arg(4)->Arg(7);

static void BM_Theta123Closed(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(theta123_table(N));
}
BENCHMARK(BM_Theta123Closed)->Arg(4)->Arg(6);

// The determinant tables are built once per N and cached; this measures lookups.
static void BM_Theta123Direct(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(theta123_direct(N, {0, 0, 0}, {N - 2, N - 2}, N - 3));
}
BENCHMARK(BM_Theta123Direct)->Arg(4)->Arg(5);

static void BM_MoySquareClosure(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    const Web w = webs::square_closure();
    for (auto _ : st) benchmark::DoNotOptimize(moy_eval(w, N));
}
BENCHMARK(BM_MoySquareClosure)->Arg(3)->Arg(5);

static void BM_StateSumFigureEight(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    const LinkDiagram d = parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]");
    for (auto _ : st) benchmark::DoNotOptimize(state_sum(d, N));
}
BENCHMARK(BM_StateSumFigureEight)->Arg(2)->Arg(4);

static void BM_StateSumBraid(benchmark::State& st) {
    const LinkDiagram d = braid_closure({1, -2, 1, -2, 1, -2, 1, -2}, 3);
    for (auto _ : st) benchmark::DoNotOptimize(state_sum(d, 3));
}
BENCHMARK(BM_StateSumBraid)->Unit(benchmark::kMillisecond);

static void BM_RelationCN2(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_relation("CN2", 4));
}
BENCHMARK(BM_RelationCN2)->Unit(benchmark::kMillisecond);

static void BM_RelationDR2(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_relation("DR2", 3));
}
BENCHMARK(BM_RelationDR2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
