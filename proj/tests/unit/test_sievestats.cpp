#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "vdw/errors.hpp"
#include "vdw/sievestats.hpp"

using namespace vdw;
using vdw::test::small_poly;

TEST(SieveStats, PiFr) {
    const NumberField Q = load_field("Q");
    const OPoly f = small_poly(Q, "[-1,-1,0]");
    EXPECT_EQ(pi_f_r(Q, f, parse_splitting_type("(1,1,0)"), 5), 1u);
    EXPECT_EQ(pi_f_r(Q, f, parse_splitting_type("(0,0,1)"), 5), 2u);
    EXPECT_EQ(pi_f_r(Q, f, parse_splitting_type("(0,0,1)"), 1), 0u);
}

TEST(SieveStats, RootCounts) {
    const NumberField Q = load_field("Q");
    EXPECT_EQ(pi_f(Q, small_poly(Q, "[1,0]"), 13), 4u);
    EXPECT_EQ(pi_f(Q, small_poly(Q, "[1,0]"), 1), 0u);
    for (const char* name : {"Q", "Qi"}) {
        const NumberField K = load_field(name);
        const OPoly lin = small_poly(K, K.degree() == 1 ? "[-1]" : "[[-1,0]]");
        std::uint64_t ramified = 0;
        for (auto p : primes_up_to(100))
            for (const auto& P : primes_above(K, p)) ramified += !P.unramified && P.q <= 100;
        EXPECT_EQ(pi_f(K, lin, 100), pi_K(K, 100) - ramified) << name;
    }
}

TEST(SieveStats, DeviationOfSinglePolynomial) {
    const NumberField Q = load_field("Q");
    const auto r = parse_splitting_type("(2,0)");
    auto rep = deviation_sweep(Q, {2, 0, 1}, r, 50, true);
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_EQ(rep.rows[0].pi_fr, 0u);  // X^2 is never squarefree
    EXPECT_NEAR(rep.rows[0].D, -0.5 * static_cast<double>(pi_K(Q, 50)), 1e-12);
}

TEST(SieveStats, DeviationRatioIsFinite) {
    const NumberField Q = load_field("Q");
    auto rep = deviation_sweep(Q, {2, 1, 1}, parse_splitting_type("(2,0)"), 50);
    EXPECT_TRUE(std::isfinite(rep.ratio));
    EXPECT_GE(rep.ratio, 0.0);
}

TEST(SieveStats, DeviationAgreesWithDirectSum) {
    const NumberField Q = load_field("Q");
    const auto r = parse_splitting_type("(0,1)");
    auto rep = deviation_sweep(Q, {2, 3, 2}, r, 30, true);
    double s = 0.0;
    for (const auto& row : rep.rows) {
        const double direct = static_cast<double>(pi_f_r(Q, row.f, r, 30)) - 0.5 * static_cast<double>(rep.pi_K);
        EXPECT_NEAR(row.D, direct, 1e-9);
        s += direct * direct;
    }
    EXPECT_NEAR(rep.sum_sq, s, 1e-6);
}

TEST(SieveStats, AvoidanceIncludesSquareDiscriminants) {
    const NumberField Q = load_field("Q");
    auto rep = avoidance(Q, {2, 1, 1}, {parse_splitting_type("(0,1)")}, 100);
    // Quadratics with a square discriminant never reduce to an irreducible.
    std::uint64_t split = 0;
    for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c) {
            const int d = b * b - 4 * c;
            const int s = d >= 0 ? static_cast<int>(std::lround(std::sqrt(d))) : -1;
            split += s * s == d;
        }
    EXPECT_GE(rep.E, split);
    EXPECT_LE(rep.E, rep.population);
}

TEST(SieveStats, SelbergSums) {
    const NumberField Q = load_field("Q");
    EXPECT_EQ(selberg_sum(Q, 1, 2, 10), 7);
    EXPECT_EQ(selberg_sum(Q, Rational(1, 2), 2, 6), Rational(11, 4));
    EXPECT_EQ(selberg_sum(Q, 1, 20, 10), 1);
}

TEST(SieveStats, LargeSieveBoundedAndParseval) {
    for (const char* name : {"Q", "Qi"}) {
        const NumberField K = load_field(name);
        auto rep = large_sieve_check(K, 1, 10, 7, 100, 42);
        EXPECT_LE(rep.max_ratio, 16.0);
        EXPECT_LT(rep.parseval_error, 1e-9);
        auto again = large_sieve_check(K, 1, 10, 7, 100, 42);
        EXPECT_EQ(rep.ratios, again.ratios);
    }
}

TEST(SieveStats, LargeSieveZeroWeights) {
    const NumberField Q = load_field("Q");
    const std::uint64_t pts = 21;
    EXPECT_EQ(large_sieve_ratio(Q, 1, 10, 7, std::vector<std::complex<double>>(pts, 0.0)), 0.0);
}

TEST(SieveStats, DefaultCutoff) {
    EXPECT_EQ(default_sieve_x(load_field("Q"), 80), 9u);
    EXPECT_EQ(default_sieve_x(load_field("Qi"), 10), 10u);
}
