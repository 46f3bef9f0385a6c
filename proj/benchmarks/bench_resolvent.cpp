#include <benchmark/benchmark.h>

#include "vdw/resolvent.hpp"

using namespace vdw;

static void BM_BuildResolvent(benchmark::State& st, const char* field, const char* poly, const char* group) {
    const NumberField K = load_field(field);
    const BigOPoly f = parse_poly(K, poly);
    for (auto _ : st) benchmark::DoNotOptimize(build_resolvent(K, f, group).residual);
}
BENCHMARK_CAPTURE(BM_BuildResolvent, Q_cubic_A3, "Q", "[-1,-1,0,1]", "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_BuildResolvent, Qi_cubic_A3, "Qi", "[[1,2],[0,-1],[3,0],[1,0]]", "A3")
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_BuildResolvent, Q_quartic_D4, "Q", "[1,1,0,0,1]", "D4")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_BuildResolvent, Q_quintic_F20, "Q", "[-1,-1,0,0,0,1]", "(1 2 3 4 5);(2 3 5 4)")
    ->Unit(benchmark::kMillisecond);

static void BM_IteratedDisc(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::vector<std::optional<std::int64_t>> fixed(n - 1, 0);
    fixed[0] = std::nullopt;
    for (auto _ : st) benchmark::DoNotOptimize(iterated_disc(n, fixed).D.terms.size());
}
BENCHMARK(BM_IteratedDisc)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
