#include <benchmark/benchmark.h>

#include "vdw/galois.hpp"

using namespace vdw;

static void BM_CertifyCubics(benchmark::State& st) {
    const NumberField Q = load_field("Q");
    SnCertifier cert(Q, 3, 500, false);
    std::vector<OPoly> polys;
    enumerate(Q, {3, 3, 1}, [&](const OPoly& f) { polys.push_back(f); });
    for (auto _ : st) {
        std::size_t sn = 0;
        for (const auto& f : polys) sn += cert.certify(f).verdict == Verdict::ProvenSn;
        benchmark::DoNotOptimize(sn);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_CertifyCubics)->Unit(benchmark::kMillisecond);

static void BM_ClassifyQuartics(benchmark::State& st) {
    const NumberField Q = load_field("Q");
    FactorSearch fs(Q);
    std::vector<BigOPoly> polys;
    enumerate(Q, {4, 1, 1}, [&](const OPoly& f) { polys.push_back(to_big(f)); });
    for (auto _ : st) {
        std::size_t s4 = 0;
        for (const auto& f : polys) {
            auto g = galois_group_small(Q, fs, f);
            s4 += g && *g == "S4";
        }
        benchmark::DoNotOptimize(s4);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_ClassifyQuartics)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
