#include <gtest/gtest.h>

#include <cmath>

#include "vdw/constants.hpp"
#include "vdw/errors.hpp"

using namespace vdw;

TEST(Constants, RootProductConstant) {
    EXPECT_NEAR(c_k_prime(load_field("Q")).to_double(), 1.0, 1e-30);
    EXPECT_NEAR(c_k_prime(load_field("Qi")).to_double(), 2.0, 1e-30);
    EXPECT_NEAR(c_k_prime(load_field("Qsqrt2")).to_double(), 1.0, 1e-30);
}

TEST(Constants, IdealDensityFits) {
    EXPECT_NEAR(c_k_fit(load_field("Q"), 100000).slope, 1.0, 0.01);
    EXPECT_NEAR(c_k_fit(load_field("Qi"), 1000000).slope, M_PI / 4, 0.02 * M_PI / 4);
    const double q2 = 2 * std::log(1 + std::sqrt(2.0)) / std::sqrt(8.0);
    EXPECT_NEAR(c_k_fit(load_field("Qsqrt2"), 1000000).slope, q2, 0.05 * q2);
}

TEST(Constants, DSumsOverQ) {
    const NumberField Q = load_field("Q");
    const double z2 = M_PI * M_PI / 6, z3 = 1.2020569031595942;
    EXPECT_NEAR(d_nk(Q, 3, 1000000).value, 2 * (z2 - 1), 1e-3);
    EXPECT_NEAR(d_nk(Q, 4, 1000000).value, 2 * (z3 - 1), 1e-4);
    EXPECT_EQ(d_nk(Q, 3, 2).value, 0.0);
}

TEST(Constants, VolumesExact) {
    EXPECT_EQ(slab_volume(2), 2);
    EXPECT_EQ(slab_volume(3), 3);
    EXPECT_EQ(slab_volume(4), Rational(16, 3));
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(slab_volume(n), irwin_hall_volume(n)) << n;
    EXPECT_EQ(k_nd(3, 2, 0).exact, 9);
    EXPECT_EQ(k_nd(2, 1, 0).exact, 2);
}

TEST(Constants, VolumeMatchesLatticeCount) {
    auto k3 = k_nd(3, 1, 200);
    EXPECT_NEAR(k3.lattice / 3.0, 1.0, 0.03);
    auto k4 = k_nd(4, 1, 200);
    EXPECT_NEAR(k4.lattice / (16.0 / 3.0), 1.0, 0.03);
}

TEST(Constants, ZetaPartialSums) {
    const NumberField Q = load_field("Q");
    EXPECT_NEAR(zeta_partial(Q, 2.0, 100000, 1.0), M_PI * M_PI / 6, 1e-4);
    EXPECT_THROW(zeta_partial(Q, 1.0, 10, 1.0), ConfigError);
}

TEST(Constants, BundleForRationals) {
    auto b = constant_bundle(load_field("Q"), 3, 100000, 100000);
    EXPECT_NEAR(b.c_k, 1.0, 0.01);
    EXPECT_EQ(b.k.exact, 3);
    EXPECT_TRUE(b.D_within_zeta);
    EXPECT_NEAR(b.zeta, M_PI * M_PI / 6, 1e-3);
}

TEST(Constants, MainTermComparisonSmallGrid) {
    auto rep = theorem3_compare(load_field("Q"), 3, {1, 20, 40});
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_EQ(rep.rows[0].rho, 15u);
    EXPECT_DOUBLE_EQ(rep.rows[0].ratio, 15.0);
    EXPECT_THROW(theorem3_compare(load_field("Qsqrt-5"), 2, {1}), ConfigError);
}
