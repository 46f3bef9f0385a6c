#include <gtest/gtest.h>

#include <cmath>

#include "vdw/densities.hpp"
#include "vdw/perm.hpp"

using namespace vdw;

namespace {
SplittingType T(const char* s) { return parse_splitting_type(s); }
}  // namespace

TEST(Densities, CycleTypeDensities) {
    EXPECT_EQ(delta_r(T("(3,0,0)")), Rational(1, 6));
    EXPECT_EQ(delta_r(T("(1,1,0)")), Rational(1, 2));
    EXPECT_EQ(delta_r(T("(1)")), 1);
}

TEST(Densities, TranspositionAndPrimeCycleSets) {
    EXPECT_EQ(delta_T(4).value, Rational(1, 4));
    EXPECT_EQ(delta_T(3).value, Rational(1, 2));
    EXPECT_EQ(delta_T(2).value, Rational(1, 2));
    EXPECT_EQ(delta_P(4).value, Rational(1, 3));
    EXPECT_EQ(delta_P(5).value, Rational(8, 15));
    EXPECT_EQ(delta_P(2).value, Rational(1, 2));
}

TEST(Densities, ClosedFormsMatchBruteForce) {
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(delta_T(n).value, delta_T_bruteforce(n).value) << n;
        EXPECT_EQ(delta_P(n).value, delta_P_bruteforce(n).value) << n;
    }
}

TEST(Densities, ClassSizesPartitionSymmetricGroup) {
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(delta_total(n), 1) << n;
        EXPECT_EQ(delta_first_moment(n), 1) << n;
        BigInt fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        for (const auto& r : all_splitting_types(n)) {
            const Rational size = delta_r(r) * Rational(fact);
            EXPECT_EQ(denominator(size), 1) << r.str();
        }
    }
}

TEST(Densities, CycleTypeOfPermutationsMatchesDensity) {
    for (int n = 2; n <= 6; ++n) {
        std::map<SplittingType, int> counts;
        const auto perms = all_perms(n);
        for (const auto& p : perms) ++counts[cycle_type(p)];
        for (const auto& [r, c] : counts) EXPECT_EQ(delta_r(r), Rational(c, static_cast<int>(perms.size())));
    }
}

TEST(Densities, TypeSets) {
    auto s4 = type_sets(4);
    ASSERT_EQ(s4.T.size(), 1u);
    EXPECT_EQ(s4.T[0], T("(2,1,0,0)"));
    auto s2 = type_sets(2);
    ASSERT_EQ(s2.T.size(), 1u);
    EXPECT_EQ(s2.T[0], T("(0,1)"));
    // For n = 3 both 2 and 3 exceed n/2, so P holds the 2-cycle and the 3-cycle types.
    auto s3 = type_sets(3);
    Rational p = 0;
    for (const auto& r : s3.P) p += delta_r(r);
    EXPECT_EQ(p, delta_P(3).value);
    EXPECT_EQ(p, Rational(5, 6));
}

TEST(Densities, StirlingTrendForTranspositions) {
    const double v = rational_to_double(delta_T(8).value) * std::sqrt(2 * M_PI * 8);
    EXPECT_NEAR(v, 1.0, 0.15);
}

TEST(Densities, TransitiveSubgroupsWithTranspositionAndLargePrimeCycleAreSymmetric) {
    const int expected_transitive[] = {0, 0, 1, 2, 9, 20};
    for (int n = 2; n <= 5; ++n) {
        auto cert = lemma7_check(n);
        EXPECT_TRUE(cert.holds) << n;
        EXPECT_EQ(static_cast<int>(cert.transitive.size()), expected_transitive[n]) << n;
    }
    auto c3 = lemma7_check(3);
    int with_t = 0;
    for (const auto& g : c3.transitive) with_t += g.has_transposition;
    EXPECT_EQ(with_t, 1);
}
