#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "vdw/errors.hpp"
#include "vdw/resolvent.hpp"

using namespace vdw;
using vdw::test::big_poly;

namespace {

BigOElem rat(std::int64_t v) {
    BigOElem e;
    e.c[0] = v;
    return e;
}

BigOPoly cubic(std::int64_t c, std::int64_t b, std::int64_t a) {
    BigOPoly f;
    f.a = {rat(c), rat(b), rat(a)};
    return f;
}

}  // namespace

TEST(Resolvent, DiscriminantExamples) {
    const NumberField Q = load_field("Q");
    EXPECT_EQ(poly_disc(Q, big_poly(Q, "[-1,-1,0]")), rat(-23));
    EXPECT_EQ(poly_disc(Q, big_poly(Q, "[1,0]")), rat(-4));
    EXPECT_EQ(poly_disc(Q, big_poly(Q, "[-1,-3,0]")), rat(81));
    EXPECT_EQ(poly_disc(Q, big_poly(Q, "[1,0,0,0]")), rat(256));
    const NumberField Qi = load_field("Qi");
    BigOElem four_i;
    four_i.c[1] = 4;
    EXPECT_EQ(poly_disc(Qi, big_poly(Qi, "[[0,-1],[0,0]]")), four_i);
}

TEST(Resolvent, CubicDiscriminantMatchesClosedForm) {
    const NumberField Q = load_field("Q");
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-50, 50);
    for (int t = 0; t < 200; ++t) {
        const std::int64_t a = coef(rng), b = coef(rng), c = coef(rng);
        const std::int64_t d = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
        EXPECT_EQ(poly_disc(Q, cubic(c, b, a)), rat(d));
        // The generic route goes through the ring resultant.
        BigOPoly f = cubic(c, b, a);
        f.a.insert(f.a.begin(), rat(0));  // X * f
        const BigOElem dx = poly_disc(Q, f);
        EXPECT_EQ(dx, rat(d * c * c));
    }
}

TEST(Resolvent, CosetCounts) {
    const NumberField Q = load_field("Q");
    const BigOPoly f = big_poly(Q, "[1,1,0,0]");  // X^4 + X + 1
    const std::pair<const char*, int> groups[] = {{"S4", 1}, {"A4", 2}, {"D4", 3}, {"C4", 6}, {"V4", 6}};
    for (const auto& [g, m] : groups) {
        auto r = build_resolvent(Q, f, g);
        EXPECT_EQ(static_cast<int>(r.cosets.size()), m) << g;
        EXPECT_EQ(r.group_order * m, 24) << g;
        EXPECT_EQ(r.phi.degree(), m) << g;
        EXPECT_LT(r.residual, 1e-6) << g;
    }
}

TEST(Resolvent, SymmetricGroupGivesLinearResolvent) {
    const NumberField Q = load_field("Q");
    // X^2 + 3X + 2: β1 β2^2 + β2 β1^2 = α0 (-α1) = -6.
    auto r = build_resolvent(Q, big_poly(Q, "[2,3]"), "S2");
    ASSERT_EQ(r.phi.degree(), 1);
    EXPECT_EQ(r.phi.a[0], rat(6));
    EXPECT_THROW(build_resolvent(Q, big_poly(Q, "[1,2]"), "S2"), ConfigError);  // (X+1)^2
}

TEST(Resolvent, A3DiscriminantIdentity) {
    // The two A3 values differ by ±β1β2β3 ∏(βi - βj), so disc Φ = α0^2 d_f.
    const NumberField Q = load_field("Q");
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-12, 12);
    int checked = 0;
    while (checked < 60) {
        const std::int64_t a = coef(rng), b = coef(rng), c = coef(rng);
        const BigOPoly f = cubic(c, b, a);
        const BigInt d = poly_disc(Q, f).c[0];
        if (d == 0) continue;
        auto r = build_resolvent(Q, f, "A3");
        ASSERT_EQ(r.phi.degree(), 2);
        const BigInt p1 = r.phi.a[1].c[0], p0 = r.phi.a[0].c[0];
        EXPECT_EQ(p1 * p1 - 4 * p0, BigInt(c * c) * d) << a << ' ' << b << ' ' << c;
        ++checked;
    }
}

TEST(Resolvent, RootsDetectSmallerGroups) {
    const NumberField Q = load_field("Q");
    EXPECT_TRUE(resolvent_has_root(Q, build_resolvent(Q, big_poly(Q, "[-1,-3,0]"), "A3")));
    EXPECT_FALSE(resolvent_has_root(Q, build_resolvent(Q, big_poly(Q, "[-1,-1,0]"), "A3")));
    EXPECT_TRUE(resolvent_has_root(Q, build_resolvent(Q, big_poly(Q, "[1,0,0,0]"), "D4")));
    // X^4 + X^2 + X + 1 has D4 values near -2.5689, 3.2044, 0.3644.
    const auto generic = build_resolvent(Q, big_poly(Q, "[1,1,1,0]"), "D4");
    EXPECT_TRUE(resolvent_is_squarefree(Q, generic));
    EXPECT_FALSE(resolvent_has_root(Q, generic));
}

TEST(Resolvent, DihedralInvariantCollapsesOnTrinomials) {
    const NumberField Q = load_field("Q");
    for (const char* f : {"[1,1,0,0]", "[2,1,0,0]", "[3,2,0,0]"}) {
        const auto r = build_resolvent(Q, big_poly(Q, f), "D4");
        EXPECT_FALSE(resolvent_is_squarefree(Q, r)) << f;
        // Φ = (z - θ)^3 for a single value θ.
        const BigInt s = r.phi.a[2].c[0];
        ASSERT_EQ(s % 3, 0) << f;
        const BigInt t = -s / 3;
        EXPECT_EQ(r.phi.a[1].c[0], 3 * t * t) << f;
        EXPECT_EQ(r.phi.a[0].c[0], -t * t * t) << f;
    }
    EXPECT_TRUE(resolvent_is_squarefree(Q, build_resolvent(Q, big_poly(Q, "[-1,-3,0]"), "A3")));
}

TEST(Resolvent, GaussianCubicsAgreeWithSquareTest) {
    for (const char* name : {"Q", "Qi"}) {
        auto a = a3_resolvent_agreement(load_field(name), 1);
        EXPECT_GT(a.checked, 0u) << name;
        EXPECT_EQ(a.mismatches, 0u) << name;
        EXPECT_LT(a.max_residual, 1e-6) << name;
    }
}

TEST(Resolvent, IteratedDiscriminantOfDepressedCubic) {
    auto it = iterated_disc(3, {std::nullopt, 0});
    ASSERT_EQ(it.D.nvars, 2);
    // Variables are (α0, α1); d_f = -4 α1^3 - 27 α0^2.
    const MPoly a0 = MPoly::variable(2, 0), a1 = MPoly::variable(2, 1);
    const MPoly df = MPoly::constant(2, -4) * a1 * a1 * a1 - MPoly::constant(2, 27) * a0 * a0;
    EXPECT_EQ(it.disc_f, df);
    EXPECT_EQ(it.D, MPoly::constant(2, -432) * a1 * a1 * a1);
}

TEST(Resolvent, IteratedDiscriminantSmallCases) {
    auto q = iterated_disc(2, {std::nullopt});
    const MPoly a0 = MPoly::variable(2, 0), a1 = MPoly::variable(2, 1);
    EXPECT_EQ(q.disc_f, a1 * a1 - MPoly::constant(2, 4) * a0);
    EXPECT_EQ(q.D, MPoly::constant(q.D.nvars, 1));
    EXPECT_THROW(iterated_disc(3, {0, 0}), DegenerateFamily);
}

TEST(Resolvent, MultivariateArithmetic) {
    const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    const MPoly s = (x + y) * (x + y);
    EXPECT_EQ(s, x * x + MPoly::constant(2, 2) * x * y + y * y);
    EXPECT_EQ(s.degree_in(0), 2);
    EXPECT_EQ(s.coefficient(0, 1), MPoly::constant(2, 2) * y);
    EXPECT_TRUE((s - s).is_zero());
    EXPECT_EQ((MPoly::constant(2, 6) * x).divide(3), MPoly::constant(2, 2) * x);
    EXPECT_EQ(-x + x, MPoly::constant(2, 0));
    EXPECT_FALSE(s.str({"x", "y"}).empty());
}

TEST(Resolvent, LogLogSlope) {
    std::vector<double> x{1, 2, 4, 8}, y{3, 12, 48, 192};
    EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-12);
}
