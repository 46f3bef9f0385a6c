#include <gtest/gtest.h>

#include <cmath>

#include "vdw/densities.hpp"
#include "vdw/errors.hpp"
#include "vdw/ffpoly.hpp"

using namespace vdw;

namespace {

SplittingType T(const char* s) { return parse_splitting_type(s); }

// Necklace count: monic irreducibles of degree n over F_q.
std::uint64_t necklaces(std::uint64_t q, int n) {
    auto mu = [](int m) {
        int r = 1;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                r = -r;
            }
        return m > 1 ? -r : r;
    };
    std::int64_t s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += mu(d) * static_cast<std::int64_t>(std::pow(q, n / d) + 0.5);
    return static_cast<std::uint64_t>(s / n);
}

}  // namespace

TEST(FiniteField, ExtensionArithmetic) {
    const FqField F = FqField::of_size(9);
    EXPECT_EQ(F.p(), 3u);
    EXPECT_EQ(F.f(), 2);
    for (Fq a = 1; a < 9; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
    for (Fq a = 0; a < 9; ++a) EXPECT_EQ(F.pow(a, 9), a);  // Frobenius fixes F_9
    EXPECT_THROW(FqField::of_size(6), Error);
}

TEST(FiniteField, Factorizations) {
    const FqField F5 = FqField::prime(5);
    auto f1 = factor(F5, {4, 0, 1});  // X^2 - 1
    ASSERT_EQ(f1.size(), 2u);
    EXPECT_EQ(f1[0].first, (FqPoly{1, 1}));  // X + 1
    EXPECT_EQ(f1[1].first, (FqPoly{4, 1}));  // X - 1
    EXPECT_EQ(f1[0].second, 1);

    const FqField F2 = FqField::prime(2);
    auto f2 = factor(F2, {1, 1, 0, 1});  // X^3 + X + 1
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].first, (FqPoly{1, 1, 0, 1}));

    const FqField F3 = FqField::prime(3);
    auto f3 = factor(F3, {0, 0, 1});  // X^2
    ASSERT_EQ(f3.size(), 1u);
    EXPECT_EQ(f3[0].first, (FqPoly{0, 1}));
    EXPECT_EQ(f3[0].second, 2);
}

TEST(FiniteField, FactorProductReconstructs) {
    const FqField F = FqField::of_size(9);
    FqPoly g = {2, 5, 0, 7, 1, 3, 1};
    FqPoly prod = {F.one()};
    for (const auto& [h, m] : factor(F, g))
        for (int i = 0; i < m; ++i) prod = fmul(F, prod, h);
    EXPECT_EQ(prod, g);
}

TEST(FiniteField, SplittingTypes) {
    EXPECT_EQ(splitting_type(FqField::prime(5), {4, 4, 0, 1}), T("(1,1,0)"));  // X^3 - X - 1
    EXPECT_EQ(splitting_type(FqField::prime(2), {1, 1, 0, 1}), T("(0,0,1)"));
    EXPECT_EQ(splitting_type(FqField::prime(5), {0, 2, 2, 1}), T("(3,0,0)"));  // X(X-1)(X-2)
    EXPECT_THROW(splitting_type(FqField::prime(3), {0, 0, 1}), NotSquarefree);
    EXPECT_FALSE(classify_reduction(FqField::prime(3), {0, 0, 1}).has_value());
}

TEST(FiniteField, TypeCountExamples) {
    EXPECT_EQ(count_type(FqField::prime(2), 2, T("(0,1)")), 1u);
    EXPECT_EQ(count_type(FqField::prime(3), 2, T("(2,0)")), 3u);
    EXPECT_EQ(count_type(FqField::prime(2), 1, T("(1)")), 2u);
}

TEST(FiniteField, IrreducibleCountsMatchNecklaceFormula) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> r(n, 0);
            r[n - 1] = 1;
            EXPECT_EQ(count_type(FqField::of_size(q), n, SplittingType{r}), necklaces(q, n)) << q << " " << n;
        }
}

TEST(FiniteField, AllTypeCountsPartitionMonicPolynomials) {
    for (std::uint64_t q : {2, 3, 4, 5, 9})
        for (int n = 1; n <= 4; ++n) {
            auto counts = count_all_types(FqField::of_size(q), n);
            std::uint64_t s = 0;
            for (auto c : counts) s += c;
            EXPECT_EQ(s, static_cast<std::uint64_t>(std::pow(q, n) + 0.5));
        }
}

TEST(FiniteField, TypeCountsCloseToDensity) {
    for (std::uint64_t q : {2, 3, 5, 7, 9})
        for (int n = 2; n <= 4; ++n) {
            const auto types = all_splitting_types(n);
            const auto counts = count_all_types(FqField::of_size(q), n);
            for (std::size_t i = 0; i < types.size(); ++i) {
                const double main = rational_to_double(delta_r(types[i])) * std::pow(q, n);
                EXPECT_LE(std::abs(counts[i] - main), n * n * std::pow(q, n - 1)) << q << " " << types[i].str();
            }
        }
}

TEST(FiniteField, EnumerationGuard) { EXPECT_THROW(count_type(FqField::prime(101), 4, T("(4,0,0,0)")), TooLarge); }

TEST(FiniteField, SplittingTypeParsing) {
    EXPECT_EQ(T("1,1,0").r, (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(T("(0,0,1)").n(), 3);
    EXPECT_EQ(all_splitting_types(4).size(), 5u);
    EXPECT_EQ(all_splitting_types(6).size(), 11u);
}
