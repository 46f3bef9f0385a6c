#include "vdw/hp.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include "vdw/errors.hpp"

namespace vdw::hp {

Bits digits_to_bits(int digits10) {
    return static_cast<Bits>(std::ceil(digits10 * 3.3219280948873623)) + 16;
}

int bits_to_digits(Bits bits) { return static_cast<int>(std::floor((bits - 16) / 3.3219280948873623)); }

namespace {

Bits wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

void widen(Real& a, Bits bits) {
    if (a.bits() < bits) mpfr_prec_round(a.raw(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, Bits bits) {
    mpfr_init2(v_, bits);
    if (fits_i64(v)) {
        mpfr_set_si(v_, static_cast<long>(to_i64(v)), MPFR_RNDN);
    } else {
        mpfr_set_str(v_, v.str().c_str(), 10, MPFR_RNDN);
    }
}

Real Real::from_string(const std::string& s, Bits bits) {
    Real r(bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw ConfigError("not a number: " + s);
    return r;
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits10) const {
    if (digits10 <= 0) digits10 = bits_to_digits(bits());
    if (digits10 < 1) digits10 = 1;
    std::string fmt = "%." + std::to_string(digits10) + "Rg";
    char* out = nullptr;
    mpfr_asprintf(&out, fmt.c_str(), v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

namespace {

BigInt mpfr_to_bigint(mpfr_srcptr v, mpfr_rnd_t rnd) {
    if (!mpfr_number_p(v)) throw PrecisionExhausted("non-finite value cannot be rounded");
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, v, rnd);
    char* s = mpz_get_str(nullptr, 10, z);
    BigInt out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, std::strlen(s) + 1);
    mpz_clear(z);
    return out;
}

}  // namespace

BigInt Real::round() const {
    Real t(bits() + 2);
    mpfr_round(t.v_, v_);
    return mpfr_to_bigint(t.v_, MPFR_RNDN);
}

BigInt Real::floor() const { return mpfr_to_bigint(v_, MPFR_RNDD); }
BigInt Real::ceil() const { return mpfr_to_bigint(v_, MPFR_RNDU); }

Real& Real::operator+=(const Real& o) {
    widen(*this, o.bits());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    widen(*this, o.bits());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    widen(*this, o.bits());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    widen(*this, o.bits());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r(x.bits());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.bits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.bits());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.bits());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(wider(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r(x.bits());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r(x.bits());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real root(const Real& x, unsigned long k) {
    Real r(x.bits());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.v_, x.v_, k, MPFR_RNDN);
#else
    mpfr_root(r.v_, x.v_, k, MPFR_RNDN);
#endif
    return r;
}

Real pow(const Real& x, long e) {
    Real r(x.bits());
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real hypot(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::pi(Bits bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    Real i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex& z) {
    Bits b = z.bits();
    Real r = abs(z);
    Real two(2L, b);
    Real re = sqrt((r + z.re) / two);
    Real im = sqrt((r - z.re) / two);
    if (z.im.sign() < 0) im = -im;
    return {std::move(re), std::move(im)};
}

std::vector<std::complex<double>> roots_double(const std::vector<std::complex<double>>& coeffs) {
    using C = std::complex<double>;
    const std::size_t n = coeffs.size();
    if (n == 0) return {};
    if (n == 1) return {-coeffs[0]};

    // Starting points on a circle of radius given by the Fujiwara bound.
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double c = std::abs(coeffs[k]);
        if (k == 0) c /= 2.0;
        radius = std::max(radius, std::pow(c, 1.0 / static_cast<double>(n - k)));
    }
    radius = 2.0 * radius + 1e-3;
    std::vector<C> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double ang = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.4) / static_cast<double>(n);
        z[i] = std::polar(radius * 0.5 + 0.1, ang);
    }

    auto eval = [&](C x, C& p, C& dp) {
        p = 1.0;
        dp = 0.0;
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * x + p;
            p = p * x + coeffs[k];
        }
    };

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            C p, dp;
            eval(z[i], p, dp);
            if (p == 0.0) continue;
            C ratio = p / dp;
            C s = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            C w = ratio / (1.0 - ratio * s);
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

std::vector<Complex> roots(const std::vector<Complex>& coeffs, double* max_correction) {
    const std::size_t n = coeffs.size();
    Bits bits = digits_to_bits(kDefaultDigits);
    for (const auto& c : coeffs) bits = std::max(bits, c.bits());

    std::vector<std::complex<double>> cd(n);
    for (std::size_t k = 0; k < n; ++k) cd[k] = coeffs[k].to_double();
    auto seed = roots_double(cd);

    std::vector<Complex> z;
    z.reserve(n);
    for (auto s : seed) z.emplace_back(s, bits);
    if (n == 0) return z;
    if (n == 1) {
        z[0] = -coeffs[0];
        if (max_correction) *max_correction = 0.0;
        return z;
    }

    const Real one(1L, bits);
    const double target = std::ldexp(1.0, -static_cast<int>(bits) + 8);
    double last = 1.0;
    // Aberth converges cubically from double-precision seeds; the cap only
    // guards against clustered roots.
    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex p{one, Real(bits)};
            Complex dp(bits);
            for (std::size_t k = n; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + coeffs[k];
            }
            if (p.re.is_zero() && p.im.is_zero()) continue;
            Complex ratio = p / dp;
            Complex s(bits);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                Complex inv{one, Real(bits)};
                inv /= diff;
                s += inv;
            }
            Complex den = Complex{one, Real(bits)} - ratio * s;
            Complex w = ratio / den;
            z[i] -= w;
            double mag = abs(w).to_double() / (1.0 + abs(z[i]).to_double());
            worst = std::max(worst, mag);
        }
        last = worst;
        if (worst < target) break;
    }
    if (max_correction) *max_correction = last;
    return z;
}

void sort_roots(std::vector<Complex>& rs) {
    if (rs.empty()) return;
    Bits b = rs.front().bits();
    Real tol(std::ldexp(1.0, -static_cast<int>(b / 2)), b);
    std::sort(rs.begin(), rs.end(), [&](const Complex& a, const Complex& c) {
        Real diff = a.re - c.re;
        if (abs(diff) > tol) return diff.sign() < 0;
        Real di = a.im - c.im;
        if (abs(di) > tol) return di.sign() < 0;
        return false;
    });
}

}  // namespace vdw::hp
