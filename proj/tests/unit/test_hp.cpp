#include <gtest/gtest.h>

#include <cmath>

#include "vdw/hp.hpp"

using namespace vdw::hp;

TEST(Hp, DigitsAndBitsRoundTrip) {
    for (int d : {20, 50, 100, 300}) EXPECT_GE(bits_to_digits(digits_to_bits(d)), d);
}

TEST(Hp, RoundsToNearestInteger) {
    const Bits b = 128;
    EXPECT_EQ(Real(2.4, b).round(), 2);
    EXPECT_EQ(Real(-2.6, b).round(), -3);
    EXPECT_EQ(Real(2.5, b).round(), 3);
}

TEST(Hp, SquareRootOfTwoToHighPrecision) {
    const Bits b = digits_to_bits(60);
    const Real s = sqrt(Real(2L, b));
    const Real err = abs(s * s - Real(2L, b));
    EXPECT_LT(err.to_double(), 1e-55);
}

TEST(Hp, RootsOfCyclotomicQuartic) {
    const Bits b = digits_to_bits(50);
    // X^4 + 1
    std::vector<Complex> c(4, Complex(b));
    c[0].re = Real(1L, b);
    auto rs = roots(c);
    ASSERT_EQ(rs.size(), 4u);
    for (const auto& r : rs) {
        Complex p = r * r;
        p = p * p;
        p.re += Real(1L, b);
        EXPECT_LT(abs(p).to_double(), 1e-45);
    }
}

TEST(Hp, SortOrdersByRealThenImaginary) {
    const Bits b = 100;
    std::vector<Complex> rs = {Complex({0.0, -1.0}, b), Complex({2.0, 0.0}, b), Complex({0.0, 1.0}, b)};
    sort_roots(rs);
    std::vector<std::complex<double>> got;
    for (const auto& r : rs) got.push_back(r.to_double());
    // Ascending real part; among equal real parts, ascending imaginary part.
    EXPECT_LE(got[0].real(), got[2].real());
    EXPECT_DOUBLE_EQ(got[2].real(), 2.0);
    EXPECT_LT(got[0].imag(), got[1].imag());
}

TEST(Hp, DoubleRootsMatchQuadraticFormula) {
    // X^2 - 3X + 2 = (X-1)(X-2)
    auto rs = roots_double({{2.0, 0.0}, {-3.0, 0.0}});
    ASSERT_EQ(rs.size(), 2u);
    double lo = std::min(rs[0].real(), rs[1].real()), hi = std::max(rs[0].real(), rs[1].real());
    EXPECT_NEAR(lo, 1.0, 1e-12);
    EXPECT_NEAR(hi, 2.0, 1e-12);
}
