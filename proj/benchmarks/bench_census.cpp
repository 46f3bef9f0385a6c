#include <benchmark/benchmark.h>

#include "vdw/census.hpp"

using namespace vdw;

static void BM_RhoCubicsQ(benchmark::State& st) {
    const NumberField Q = load_field("Q");
    const CensusSpec spec{3, st.range(0), 1};
    for (auto _ : st) benchmark::DoNotOptimize(rho(Q, spec).rho);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(population(Q, spec)));
}
BENCHMARK(BM_RhoCubicsQ)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_RhoQuadraticsQi(benchmark::State& st) {
    const NumberField Qi = load_field("Qi");
    const CensusSpec spec{2, st.range(0), 1};
    for (auto _ : st) benchmark::DoNotOptimize(rho(Qi, spec).rho);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(population(Qi, spec)));
}
BENCHMARK(BM_RhoQuadraticsQi)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FactorSearchQuartic(benchmark::State& st) {
    const NumberField Q = load_field("Q");
    FactorSearch fs(Q);
    std::vector<OPoly> polys;
    enumerate(Q, {4, 2, 1}, [&](const OPoly& f) { polys.push_back(f); });
    for (auto _ : st) {
        std::size_t red = 0;
        for (const auto& f : polys) red += fs.is_reducible(f);
        benchmark::DoNotOptimize(red);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_FactorSearchQuartic)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
