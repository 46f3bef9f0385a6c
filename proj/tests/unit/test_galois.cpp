#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "vdw/errors.hpp"
#include "vdw/galois.hpp"
#include "vdw/primes.hpp"

using namespace vdw;
using vdw::test::big_poly;
using vdw::test::small_poly;

namespace {

std::int64_t isqrt_exact(std::int64_t d) {
    if (d < 0) return -1;
    std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    while (s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    return s * s == d ? s : -1;
}

/// Over Z: "reducible", "A3" or "S3" from integer roots and the discriminant.
std::string cubic_group(std::int64_t c, std::int64_t b, std::int64_t a) {
    const std::int64_t lo = c == 0 ? 0 : std::abs(c);
    if (c == 0) return "reducible";
    for (std::int64_t t = 1; t <= lo; ++t) {
        if (c % t) continue;
        for (std::int64_t x : {t, -t})
            if (((x + a) * x + b) * x + c == 0) return "reducible";
    }
    const std::int64_t d = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
    return isqrt_exact(d) >= 0 ? "A3" : "S3";
}

}  // namespace

TEST(Galois, CertifiesGenericCubic) {
    const NumberField Q = load_field("Q");
    auto cert = certify_sn(Q, big_poly(Q, "[-1,-1,0]"));
    EXPECT_EQ(cert.verdict, Verdict::ProvenSn);
    bool saw_two = false;
    for (const auto& w : cert.witnesses) {
        saw_two |= w.p == 2;
        const auto P = primes_above(Q, w.p)[0];
        const ResidueMap R(Q, P);
        auto direct = classify_reduction(R.field(), R.reduce_poly(small_poly(Q, "[-1,-1,0]")));
        ASSERT_TRUE(direct.has_value());
        EXPECT_EQ(*direct, w.type);
    }
    EXPECT_TRUE(saw_two);  // X^3 + X + 1 is irreducible over F_2
}

TEST(Galois, NonSymmetricExamples) {
    const NumberField Q = load_field("Q");
    auto red = certify_sn(Q, big_poly(Q, "[-1,0,0]"));
    EXPECT_EQ(red.verdict, Verdict::ProvenNotSn);
    EXPECT_EQ(red.group, "reducible");
    EXPECT_EQ(classify_small(Q, big_poly(Q, "[-1,-3,0]")), "A3");
    EXPECT_EQ(certify_sn(Q, big_poly(Q, "[-1,-3,0]")).verdict, Verdict::ProvenNotSn);
    EXPECT_EQ(classify_small(Q, big_poly(Q, "[1,0,0,0]")), "V4");
    EXPECT_EQ(classify_small(Q, big_poly(Q, "[-1,-1,0]")), "S3");
    EXPECT_EQ(classify_small(Q, big_poly(Q, "[1,0]")), "C2");
    EXPECT_THROW(classify_small(Q, big_poly(Q, "[-1,0]")), Reducible);
}

TEST(Galois, OverGaussianIntegers) {
    const NumberField Qi = load_field("Qi");
    // X^2 + 1 splits over Q(i); X^2 - 3 does not.
    EXPECT_THROW(classify_small(Qi, big_poly(Qi, "[[1,0],[0,0]]")), Reducible);
    EXPECT_EQ(classify_small(Qi, big_poly(Qi, "[[-3,0],[0,0]]")), "C2");
    // X^4 + 1 = (X^2 - i)(X^2 + i).
    EXPECT_THROW(classify_small(Qi, big_poly(Qi, "[[1,0],[0,0],[0,0],[0,0]]")), Reducible);
}

TEST(Galois, CensusOfSmallCubics) {
    const NumberField Q = load_field("Q");
    auto c = non_sn_census(Q, {3, 1, 1});
    std::map<std::string, std::uint64_t> expect;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int cc = -1; cc <= 1; ++cc) ++expect[cubic_group(cc, b, a)];
    EXPECT_EQ(c.total, 27u);
    EXPECT_EQ(c.proven_sn, expect["S3"]);
    EXPECT_EQ(c.by_group["reducible"], expect["reducible"]);
    EXPECT_EQ(c.undecided, 0u);
    EXPECT_EQ(non_sn_census(Q, {3, 0, 1}).total, 1u);
}

TEST(Galois, CubicVerdictsAreSound) {
    const NumberField Q = load_field("Q");
    SnCertifier cert(Q, 3, 500, false);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int trial = 0; trial < 400; ++trial) {
        const int a = coef(rng), b = coef(rng), c = coef(rng);
        const std::string g = cubic_group(c, b, a);
        OPoly f = small_poly(Q, "[0,0,0]");
        f.a[0].c[0] = c;
        f.a[1].c[0] = b;
        f.a[2].c[0] = a;
        auto v = cert.certify(f).verdict;
        if (v == Verdict::ProvenSn) EXPECT_EQ(g, "S3") << a << ' ' << b << ' ' << c;
        if (v == Verdict::ProvenNotSn) EXPECT_NE(g, "S3") << a << ' ' << b << ' ' << c;
    }
}

TEST(Galois, QuarticVerdictsAgreeWithClassifier) {
    const NumberField Q = load_field("Q");
    SnCertifier sampled(Q, 4, 500, false);
    FactorSearch fs(Q);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-20, 20);
    int decided = 0;
    for (int trial = 0; trial < 200; ++trial) {
        OPoly f = small_poly(Q, "[0,0,0,0]");
        for (int k = 0; k < 4; ++k) f.a[k].c[0] = coef(rng);
        auto g = galois_group_small(Q, fs, to_big(f));
        auto v = sampled.certify(f).verdict;
        if (v == Verdict::ProvenSn) {
            ASSERT_TRUE(g.has_value());
            EXPECT_EQ(*g, "S4");
            ++decided;
        }
        if (v == Verdict::ProvenNotSn && g) EXPECT_NE(*g, "S4");
    }
    EXPECT_GT(decided, 100);
}

TEST(Galois, LargerSearchNeverLosesVerdicts) {
    const NumberField Qi = load_field("Qi");
    SnCertifier small(Qi, 3, 20, false), large(Qi, 3, 200, false);
    enumerate(Qi, {3, 1, 1}, [&](const OPoly& f) {
        const auto a = small.certify(f).verdict, b = large.certify(f).verdict;
        if (a != Verdict::Undecided) EXPECT_EQ(a, b);
    });
}

TEST(Galois, SquareRoots) {
    const NumberField Q = load_field("Q");
    BigOElem x;
    x.c[0] = 49;
    auto r = square_root(Q, x);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(Q.mul(*r, *r), x);
    x.c[0] = 50;
    EXPECT_FALSE(square_root(Q, x).has_value());

    const NumberField Qi = load_field("Qi");
    BigOElem m1;
    m1.c[0] = -1;
    auto i = square_root(Qi, m1);
    ASSERT_TRUE(i.has_value());
    EXPECT_EQ(Qi.mul(*i, *i), m1);
    BigOElem two_i;  // (1+i)^2
    two_i.c[1] = 2;
    auto s = square_root(Qi, two_i);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(Qi.mul(*s, *s), two_i);
}
