#pragma once

// Arbitrary-precision real and complex arithmetic on top of MPFR, plus
// polynomial root isolation used by the embedding and resolvent code.
//
// Every Real carries its own precision; binary operations produce a result at
// the larger precision of their operands. There is no global precision state,
// so values can be used from several threads at once.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <mpfr.h>

#include "vdw/bigint.hpp"

namespace vdw::hp {

using Bits = mpfr_prec_t;

inline constexpr int kDefaultDigits = 50;

Bits digits_to_bits(int digits10);
int bits_to_digits(Bits bits);

class Real {
public:
    explicit Real(Bits bits = digits_to_bits(kDefaultDigits));
    Real(double v, Bits bits);
    Real(long v, Bits bits);
    Real(const BigInt& v, Bits bits);
    static Real from_string(const std::string& s, Bits bits);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    Bits bits() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    std::string str(int digits10 = 0) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Nearest integer (ties away from zero).
    BigInt round() const;
    BigInt floor() const;
    BigInt ceil() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real log(const Real& x);
    friend Real exp(const Real& x);
    friend Real atan2(const Real& y, const Real& x);
    friend Real cos(const Real& x);
    friend Real sin(const Real& x);
    /// x^(1/k) for x >= 0.
    friend Real root(const Real& x, unsigned long k);
    friend Real pow(const Real& x, long e);
    friend Real max(const Real& a, const Real& b);
    friend Real hypot(const Real& a, const Real& b);

    static Real pi(Bits bits);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real atan2(const Real& y, const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real root(const Real& x, unsigned long k);
Real pow(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real hypot(const Real& a, const Real& b);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    explicit Complex(Bits bits) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(std::complex<double> z, Bits bits) : re(z.real(), bits), im(z.imag(), bits) {}

    Bits bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
    std::complex<double> to_double() const { return {re.to_double(), im.to_double()}; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
};

Real abs(const Complex& z);
Complex sqrt(const Complex& z);

/// Roots of a monic polynomial with coefficients (c_0, ..., c_{n-1}) (leading 1
/// implicit), by the Aberth-Ehrlich iteration in double precision.
std::vector<std::complex<double>> roots_double(const std::vector<std::complex<double>>& coeffs);

/// Same, refined to the precision of the coefficients. Roots must be simple
/// for the iteration to reach full precision; `max_correction` receives the
/// size of the last Aberth step relative to the root modulus.
std::vector<Complex> roots(const std::vector<Complex>& coeffs, double* max_correction = nullptr);

/// Orders roots by (real part, imaginary part), treating values that agree
/// to within 2^-(bits/2) as equal in the real part.
void sort_roots(std::vector<Complex>& rs);

}  // namespace vdw::hp
