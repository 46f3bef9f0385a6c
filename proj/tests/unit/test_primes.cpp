#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "vdw/errors.hpp"
#include "vdw/primes.hpp"

using namespace vdw;
using vdw::test::small_poly;

TEST(Primes, RationalPrimeIsPrime) {
    auto P = primes_above(load_field("Q"), 7);
    ASSERT_EQ(P.size(), 1u);
    EXPECT_EQ(P[0].q, 7u);
    EXPECT_EQ(P[0].e, 1);
    EXPECT_EQ(P[0].f, 1);
}

TEST(Primes, GaussianSplitting) {
    const NumberField Qi = load_field("Qi");
    auto P5 = primes_above(Qi, 5);
    ASSERT_EQ(P5.size(), 2u);
    EXPECT_EQ(P5[0].q, 5u);
    EXPECT_EQ(P5[1].q, 5u);
    auto P3 = primes_above(Qi, 3);
    ASSERT_EQ(P3.size(), 1u);
    EXPECT_EQ(P3[0].q, 9u);
    auto P2 = primes_above(Qi, 2);
    ASSERT_EQ(P2.size(), 1u);
    EXPECT_EQ(P2[0].e, 2);
    EXPECT_FALSE(P2[0].unramified);
}

TEST(Primes, EfSumIsDegree) {
    for (const char* name : {"Qi", "Qsqrt2", "Qsqrt-5"}) {
        const NumberField K = load_field(name);
        for (auto p : primes_up_to(200)) {
            int s = 0;
            for (const auto& P : primes_above(K, p)) s += P.e * P.f;
            EXPECT_EQ(s, K.degree()) << name << " p=" << p;
        }
    }
}

TEST(Primes, Reduction) {
    const NumberField Q = load_field("Q");
    const OPoly f = small_poly(Q, "[-1,-1,0]");
    EXPECT_EQ(reduce_poly(Q, f, primes_above(Q, 5)[0]), (FqPoly{4, 4, 0, 1}));
    const OPoly g = small_poly(Q, "[5,10,-15]");
    EXPECT_EQ(reduce_poly(Q, g, primes_above(Q, 5)[0]), (FqPoly{0, 0, 0, 1}));

    // X^2 - i over the prime above 5 where i -> 2.
    const NumberField Qi = load_field("Qi");
    const OPoly h = small_poly(Qi, "[[0,-1],[0,0]]");
    for (const auto& P : primes_above(Qi, 5)) {
        ResidueMap R(Qi, P);
        if (R.theta_image() != 2) continue;
        EXPECT_EQ(R.reduce_poly(h), (FqPoly{3, 0, 1}));
    }
}

TEST(Primes, PrimeIdealCounts) {
    EXPECT_EQ(pi_K(load_field("Q"), 10), 4u);
    EXPECT_EQ(pi_K(load_field("Qi"), 10), 4u);
    EXPECT_EQ(pi_K(load_field("Qi"), 1), 0u);
}

TEST(Primes, IdealCounts) {
    const auto Q = ideal_counts(load_field("Q"), 1000);
    for (std::uint64_t m = 1; m <= 1000; ++m) EXPECT_EQ(Q.a[m], 1u);
    const auto G = ideal_counts(load_field("Qi"), 1000000);
    EXPECT_EQ(G.a[5], 2u);
    // Gauss circle: ideals of norm <= x in Z[i] ~ (pi/4) x.
    EXPECT_NEAR(G.cumulative(1000000) / 1e6, M_PI / 4, 0.01 * M_PI / 4);
    // Brute-force cross-check: a(m) = #{(a,b): a^2+b^2 = m}/4.
    for (std::uint64_t m = 1; m <= 200; ++m) {
        std::uint64_t reps = 0;
        for (int a = -15; a <= 15; ++a)
            for (int b = -15; b <= 15; ++b)
                if (static_cast<std::uint64_t>(a * a + b * b) == m) ++reps;
        EXPECT_EQ(G.a[m], reps / 4) << m;
    }
    EXPECT_THROW(ideal_counts(load_field("Q"), 100000000ULL), TooLarge);
}

TEST(Primes, ReductionTableMatchesDirectClassification) {
    const NumberField Qi = load_field("Qi");
    ReductionTable table(Qi, 3, 60);
    const OPoly f = small_poly(Qi, "[[1,2],[0,-1],[3,0]]");
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& R = table.map(i);
        auto direct = classify_reduction(R.field(), R.reduce_poly(f));
        const int t = table.classify(f, i);
        if (!direct) EXPECT_EQ(t, -1);
        else EXPECT_EQ(table.types()[t], *direct);
    }
}
