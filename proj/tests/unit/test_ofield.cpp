#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "vdw/errors.hpp"
#include "vdw/ofield.hpp"

using namespace vdw;
using vdw::test::elem;
using vdw::test::small_poly;

TEST(Field, RationalFieldFromLinearPolynomial) {
    NumberField K({0, 1}, 1, "Q");
    EXPECT_EQ(K.degree(), 1);
    EXPECT_EQ(K.disc(), 1);
}

TEST(Field, GaussianField) {
    NumberField K({1, 0, 1}, 1, "Q(i)");
    EXPECT_EQ(K.degree(), 2);
    EXPECT_EQ(K.disc(), -4);
    EXPECT_EQ(K.r1(), 0);
    EXPECT_EQ(K.r2(), 1);
    EXPECT_EQ(K.unit_rank(), 0);
    EXPECT_EQ(K.torsion(), 4);
}

TEST(Field, ReducibleDefiningPolynomialRejected) {
    EXPECT_THROW(NumberField({-4, 0, 1}, 1), ReduciblePolynomial);
}

TEST(Field, PresetsLoad) {
    for (const auto& p : builtin_presets()) {
        const NumberField K = load_field(p.name);
        EXPECT_EQ(K.degree(), static_cast<int>(p.poly.size()) - 1) << p.name;
        EXPECT_EQ(K.class_number(), p.class_number);
    }
    EXPECT_EQ(load_field("Qsqrt-5").class_number(), 2);
    EXPECT_EQ(load_field("Qsqrt2").unit_rank(), 1);
    EXPECT_THROW(load_field("not-a-field"), ConfigError);
}

TEST(Field, InlineJsonField) {
    const NumberField K = load_field(R"({"defining_poly": [1, 0, 1], "class_number": 1, "label": "G"})");
    EXPECT_EQ(K.disc(), -4);
    EXPECT_EQ(K.label(), "G");
}

TEST(Field, Height) {
    const NumberField Qi = load_field("Qi");
    EXPECT_EQ(height(OElem{}), 0);
    EXPECT_EQ(height(elem(Qi, {3, 4})), 4);
    EXPECT_EQ(height(elem(Qi, {-7})), 7);
}

TEST(Field, Norms) {
    const NumberField Q = load_field("Q");
    const NumberField Qi = load_field("Qi");
    EXPECT_EQ(Qi.norm(elem(Qi, {3, 4})), 25);
    EXPECT_EQ(Q.norm(elem(Q, {7})), 7);
    for (const char* name : {"Q", "Qi", "Qsqrt2", "Qsqrt-5"}) EXPECT_EQ(load_field(name).norm(load_field(name).one()), 1);
}

TEST(Field, NormIsMultiplicative) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> u(-20, 20);
    for (const char* name : {"Qi", "Qsqrt2", "Qsqrt-5"}) {
        const NumberField K = load_field(name);
        for (int t = 0; t < 50; ++t) {
            OElem a = elem(K, {u(rng), u(rng)}), b = elem(K, {u(rng), u(rng)});
            EXPECT_EQ(K.norm(K.mul(a, b)), K.norm(a) * K.norm(b));
        }
    }
}

TEST(Field, ExactDivisionInvertsMultiplication) {
    const NumberField K = load_field("Qsqrt-5");
    const BigOElem a = to_big(elem(K, {3, -2})), b = to_big(elem(K, {1, 4}));
    auto q = K.div_exact(K.mul(a, b), b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
    // 3 is not divisible by 2 in O_K.
    EXPECT_FALSE(K.div_exact(to_big(elem(K, {3})), to_big(elem(K, {2}))).has_value());
}

TEST(Field, Embeddings) {
    const NumberField Q = load_field("Q");
    EXPECT_NEAR(Q.embed(to_big(elem(Q, {5})), 0).re.to_double(), 5.0, 1e-30);

    const NumberField Qi = load_field("Qi");
    auto z0 = Qi.embed(to_big(elem(Qi, {1, 1})), 0).to_double();
    auto z1 = Qi.embed(to_big(elem(Qi, {1, 1})), 1).to_double();
    EXPECT_NEAR(z0.real(), 1.0, 1e-15);
    EXPECT_NEAR(z0.imag(), 1.0, 1e-15);
    EXPECT_NEAR(z1.imag(), -1.0, 1e-15);

    const NumberField Q2 = load_field("Qsqrt2");
    EXPECT_NEAR(Q2.embed(to_big(elem(Q2, {1, 1})), 0).re.to_double(), 1 + std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(Q2.embed(to_big(elem(Q2, {1, 1})), 1).re.to_double(), 1 - std::sqrt(2.0), 1e-14);
}

TEST(Field, RootNormBound) {
    const NumberField Q = load_field("Q");
    EXPECT_GE(root_norm_bound(Q, small_poly(Q, "[0,0,0]")), 0);
    EXPECT_GE(root_norm_bound(Q, small_poly(Q, "[-4,0]")), 2);
    EXPECT_GE(root_norm_bound(Q, small_poly(Q, "[-1,-1,0]")), 2);  // real root 1.3247...
}

TEST(Field, EvaluateMultiplyDivide) {
    const NumberField Qi = load_field("Qi");
    const BigOPoly f = parse_poly(Qi, "[[1,0],[0,0],[1,0]]");  // X^2 + 1
    BigOElem i;
    i.c[1] = 1;
    EXPECT_TRUE(evaluate(Qi, f, i).is_zero());
    const BigOPoly g = parse_poly(Qi, "[[0,-1],[1,0]]");  // X - i
    const BigOPoly h = parse_poly(Qi, "[[0,1],[1,0]]");   // X + i
    EXPECT_EQ(multiply(Qi, g, h), f);
    auto q = divide_exact(Qi, f, g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, h);
    EXPECT_FALSE(divide_exact(Qi, f, parse_poly(Qi, "[[1,0],[1,0]]")).has_value());
}

TEST(Field, PolynomialTextRoundTrip) {
    const NumberField Q = load_field("Q");
    const BigOPoly f = parse_poly(Q, "[-1,-1,0,1]");
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(to_string(Q, f), "[[-1],[-1],[0],[1]]");
    EXPECT_EQ(parse_poly(Q, to_string(Q, f)), f);
    EXPECT_EQ(parse_poly(Q, "[-1,-1,0]", 3), f);
    EXPECT_THROW(parse_poly(Q, "[1,2,"), ConfigError);
    EXPECT_THROW(parse_poly(Q, "[1,2,3]"), ConfigError);  // leading coefficient not one

    const NumberField Qi = load_field("Qi");
    const BigOPoly g = parse_poly(Qi, "[[1,2],[0,-1],[1,0]]");
    EXPECT_EQ(g.degree(), 2);
    EXPECT_EQ(parse_poly(Qi, to_string(Qi, g)), g);
}
