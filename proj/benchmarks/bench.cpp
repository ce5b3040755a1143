#include <benchmark/benchmark.h>

#include "nestdig/construct.hpp"
#include "nestdig/digraph.hpp"
#include "nestdig/pattern.hpp"
#include "nestdig/recognize.hpp"

using namespace nestdig;

static void BM_CheckNestOrdering(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Digraph d = random_digraph(n, 0.4, 1, true);
    Ordering ord = Ordering::identity(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_nest_ordering(d, ord).ok);
}
BENCHMARK(BM_CheckNestOrdering)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

static void BM_PatternFree(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Digraph d = random_digraph(n, 0.4, 1, true);
    Ordering ord = Ordering::identity(n);
    PatternCatalog cat = nest_patterns();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pattern_free(d, ord, cat).ok);
}
BENCHMARK(BM_PatternFree)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

static void BM_BuildModel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    // A transitive tournament-like reflexive digraph always admits the
    // identity as nest ordering.
    std::vector<Arc> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = u; v <= n; ++v)
            arcs.emplace_back(u, v);
    Digraph d(n, arcs);
    Ordering ord = Ordering::identity(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_model(d, ord).n());
}
BENCHMARK(BM_BuildModel)->Arg(8)->Arg(16)->Arg(32);

static void BM_Recognize(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Digraph d = random_digraph(n, 0.3, 7, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_interval_nest(d).member);
}
BENCHMARK(BM_Recognize)->Arg(6)->Arg(7)->Arg(8);

BENCHMARK_MAIN();
