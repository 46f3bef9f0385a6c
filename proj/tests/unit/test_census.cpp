#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "vdw/census.hpp"
#include "vdw/errors.hpp"

using namespace vdw;
using vdw::test::elem;
using vdw::test::small_poly;

namespace {

/// Reference reducibility over Z for cubics: a rational root must divide the
/// lowest nonzero coefficient.
bool cubic_has_integer_root(const OPoly& f) {
    const std::int64_t c0 = f.a[0].c[0], c1 = f.a[1].c[0], c2 = f.a[2].c[0];
    if (c0 == 0) return true;
    for (std::int64_t t = 1; t <= std::abs(c0); ++t) {
        if (c0 % t) continue;
        for (std::int64_t x : {t, -t})
            if (((x + c2) * x + c1) * x + c0 == 0) return true;
    }
    return false;
}

}  // namespace

TEST(Census, Populations) {
    EXPECT_EQ(population(load_field("Q"), {3, 1, 1}), 27u);
    EXPECT_EQ(population(load_field("Qi"), {2, 1, 1}), 81u);
    EXPECT_EQ(population(load_field("Q"), {4, 0, 1}), 1u);
    EXPECT_THROW(population(load_field("Q"), {8, 100, 1}), TooLarge);
}

TEST(Census, EnumerationVisitsEachPolynomialOnce) {
    const NumberField K = load_field("Qi");
    const CensusSpec spec{2, 1, 1};
    PolyIndexer idx(2, 2, 1);
    std::set<std::uint64_t> seen;
    std::uint64_t n = 0;
    enumerate(K, spec, [&](const OPoly& f) {
        EXPECT_LE(height(f), 1);
        seen.insert(idx.index(f));
        EXPECT_EQ(idx.poly(idx.index(f)), f);
        ++n;
    });
    EXPECT_EQ(n, 81u);
    EXPECT_EQ(seen.size(), 81u);
}

TEST(Census, LinearFactorSearch) {
    const NumberField Q = load_field("Q");
    EXPECT_TRUE(has_factor_of_degree(Q, small_poly(Q, "[0,0,0]"), 1));
    EXPECT_FALSE(has_factor_of_degree(Q, small_poly(Q, "[-1,-1,0]"), 1));
    const NumberField Qi = load_field("Qi");
    EXPECT_TRUE(has_factor_of_degree(Qi, small_poly(Qi, "[[1,0],[0,0]]"), 1));
}

TEST(Census, QuadraticFactorOfQuartic) {
    const NumberField Q = load_field("Q");
    // (X^2+1)(X^2+X+1): no linear factor, reducible.
    const OPoly f = small_poly(Q, "[1,1,2,1]");
    EXPECT_FALSE(has_factor_of_degree(Q, f, 1));
    EXPECT_TRUE(has_factor_of_degree(Q, f, 2));
    FactorSearch fs(Q);
    EXPECT_TRUE(fs.is_reducible(f));
    EXPECT_FALSE(fs.is_reducible(small_poly(Q, "[1,0,0,0]")));  // X^4 + 1
}

TEST(Census, RhoExamples) {
    const NumberField Q = load_field("Q");
    auto r = rho(Q, {3, 1, 1});
    EXPECT_EQ(r.total, 27u);
    EXPECT_EQ(r.rho, 15u);
    EXPECT_EQ(r.rho_k[1], 15u);
    EXPECT_EQ(rho(Q, {2, 0, 1}).rho, 1u);
}

TEST(Census, RhoMatchesIntegerRootOracle) {
    const NumberField Q = load_field("Q");
    for (std::int64_t N = 1; N <= 4; ++N) {
        std::uint64_t expect = 0;
        enumerate(Q, {3, N, 1}, [&](const OPoly& f) { expect += cubic_has_integer_root(f); });
        EXPECT_EQ(rho(Q, {3, N, 1}).rho, expect) << N;
    }
}

TEST(Census, QuotientCountsForRationalCubics) {
    const NumberField Q = load_field("Q");
    const CensusSpec spec{3, 1, 1};
    EXPECT_EQ(T_count(Q, spec, OElem{}), 9u);
    EXPECT_EQ(T_count(Q, spec, elem(Q, {1})), 6u);  // includes (X+1)(X-1)^2
    EXPECT_EQ(T_count(Q, spec, elem(Q, {-1})), 6u);
    EXPECT_EQ(T_count(Q, spec, elem(Q, {5})), 0u);
}

TEST(Census, LatticeCounts) {
    EXPECT_EQ(L_count({3, 1, 1}, {0}), 7);
    EXPECT_EQ(L_count({3, 1, 1}, {4}), 0);
    EXPECT_EQ(L_count({3, 1, 1}, {3}), 1);
    EXPECT_EQ(L_count({2, 2, 1}, {0}), 5);
}

TEST(Census, SearchAndScanRoutesAgree) {
    for (const char* name : {"Q", "Qi", "Qsqrt2", "Qsqrt-5"})
        for (int n = 2; n <= 4; ++n) {
            const NumberField K = load_field(name);
            if (K.degree() * n >= 8) continue;
            const CensusSpec spec{n, 1, 1};
            auto a = rho(K, spec);
            auto b = rho_by_search(K, spec);
            EXPECT_EQ(a.rho, b.rho) << name << " n=" << n;
            EXPECT_EQ(a.rho_k, b.rho_k) << name << " n=" << n;
        }
}

TEST(Census, ResultsIndependentOfWorkerCount) {
    const NumberField K = load_field("Qi");
    auto a = census(K, {2, 2, 1});
    auto b = census(K, {2, 2, 4});
    EXPECT_EQ(a.rho, b.rho);
    EXPECT_EQ(a.T_table, b.T_table);
    EXPECT_EQ(a.L_table, b.L_table);
}

TEST(Census, FieldsBuiltAtTheSameAddressDoNotShareCachedEmbeddings) {
    std::vector<std::size_t> roots;
    for (const char* name : {"Q", "Qi", "Q"}) {
        const NumberField K = load_field(name);
        FactorSearch fs(K);
        roots.push_back(fs.roots(vdw::test::big_poly(K, K.degree() == 1 ? "[-1,0]" : "[[1,0],[0,0]]")).size());
    }
    EXPECT_EQ(roots, (std::vector<std::size_t>{2, 2, 2}));
}
