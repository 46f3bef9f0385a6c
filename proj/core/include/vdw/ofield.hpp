#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/hp.hpp"

namespace vdw {

inline constexpr int kMaxDegree = 8;

/// Element of O_K in the power basis 1, θ, ..., θ^{d-1}. Coordinates past the
/// field degree are always zero.
template <class Z>
struct OElemT {
    std::array<Z, kMaxDegree> c{};

    bool operator==(const OElemT& o) const { return c == o.c; }
    bool operator!=(const OElemT& o) const { return !(c == o.c); }
    bool operator<(const OElemT& o) const {
        for (int i = 0; i < kMaxDegree; ++i) {
            if (c[i] < o.c[i]) return true;
            if (o.c[i] < c[i]) return false;
        }
        return false;
    }
    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
};

using OElem = OElemT<std::int64_t>;
using BigOElem = OElemT<BigInt>;

BigOElem to_big(const OElem& a);
/// Throws TooLarge if a coordinate does not fit in 64 bits.
OElem to_small(const BigOElem& a);

/// Monic polynomial X^n + α_{n-1} X^{n-1} + ... + α_0; `a[k]` is α_k.
template <class E>
struct OPolyT {
    std::vector<E> a;
    int degree() const { return static_cast<int>(a.size()); }
    bool operator==(const OPolyT& o) const { return a == o.a; }
};

using OPoly = OPolyT<OElem>;
using BigOPoly = OPolyT<BigOElem>;

BigOPoly to_big(const OPoly& f);

class NumberField {
public:
    /// Builds Q(θ) for a monic integer polynomial given low to high.
    NumberField(std::vector<std::int64_t> defining_poly, int class_number, std::string label = {},
                int digits = hp::kDefaultDigits);

    int degree() const { return d_; }
    const std::vector<std::int64_t>& defining_poly() const { return poly_; }
    const BigInt& disc() const { return disc_; }
    int class_number() const { return h_; }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    int unit_rank() const { return r1_ + r2_ - 1; }
    /// Number of roots of unity in K.
    int torsion() const { return w_; }
    const std::string& label() const { return label_; }
    hp::Bits bits() const { return bits_; }
    int digits() const { return hp::bits_to_digits(bits_); }

    OElem zero() const { return {}; }
    OElem one() const {
        OElem e;
        e.c[0] = 1;
        return e;
    }
    OElem from_int(std::int64_t v) const {
        OElem e;
        e.c[0] = v;
        return e;
    }
    OElem theta() const;

    template <class Z>
    OElemT<Z> add(const OElemT<Z>& a, const OElemT<Z>& b) const {
        OElemT<Z> r;
        for (int i = 0; i < d_; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    template <class Z>
    OElemT<Z> sub(const OElemT<Z>& a, const OElemT<Z>& b) const {
        OElemT<Z> r;
        for (int i = 0; i < d_; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    template <class Z>
    OElemT<Z> neg(const OElemT<Z>& a) const {
        OElemT<Z> r;
        for (int i = 0; i < d_; ++i) r.c[i] = -a.c[i];
        return r;
    }
    /// Throws TooLarge on 64-bit overflow.
    OElem mul(const OElem& a, const OElem& b) const;
    BigOElem mul(const BigOElem& a, const BigOElem& b) const;

    /// Exact quotient a / b if it lies in O_K.
    std::optional<BigOElem> div_exact(const BigOElem& a, const BigOElem& b) const;

    /// Column j holds the coordinates of α θ^j.
    std::vector<std::vector<BigInt>> mul_matrix(const BigOElem& a) const;
    BigInt norm(const OElem& a) const;
    BigInt norm(const BigOElem& a) const;

    /// σ_i(θ) for embeddings ordered by decreasing real part, then decreasing
    /// imaginary part.
    const std::vector<hp::Complex>& theta_embeddings() const { return theta_; }
    /// Same roots recomputed at another precision.
    std::vector<hp::Complex> theta_embeddings(hp::Bits bits) const;

    hp::Complex embed(const BigOElem& a, int i) const;
    hp::Complex embed(const BigOElem& a, int i, const std::vector<hp::Complex>& thetas) const;
    std::complex<double> embed_double(const OElem& a, int i) const;

    /// |σ_i(θ^j)| summed over j: ht(α) ≤ N implies |σ_i(α)| ≤ coord_bound(i)·N.
    double coord_bound(int i) const { return coord_bound_[i]; }
    /// Inverse of V with V[i][j] = σ_i(θ^j), in double precision.
    const std::vector<std::vector<std::complex<double>>>& vinv_double() const { return vinv_; }
    /// Inverse of V at the precision of `thetas`.
    std::vector<std::vector<hp::Complex>> vinv(const std::vector<hp::Complex>& thetas) const;

    /// Half-widths of the coordinate box containing every α with
    /// |σ_i(α)| ≤ radius[i] for all i.
    std::vector<std::int64_t> coordinate_box(const std::vector<double>& radius) const;

    std::string basis_description() const;

private:
    int d_;
    std::vector<std::int64_t> poly_;
    BigInt disc_;
    int h_;
    int r1_ = 0;
    int r2_ = 0;
    int w_ = 2;
    std::string label_;
    hp::Bits bits_;
    std::vector<hp::Complex> theta_;
    // θ^{d+j} = Σ_i red_[j][i] θ^i for 0 ≤ j ≤ d-2.
    std::vector<std::array<std::int64_t, kMaxDegree>> red_;
    std::vector<std::vector<std::complex<double>>> basis_double_;
    std::vector<std::vector<std::complex<double>>> vinv_;
    std::vector<double> coord_bound_;
};

NumberField make_field(const std::vector<std::int64_t>& defining_poly, int class_number, const std::string& label = {},
                       int digits = hp::kDefaultDigits);

/// Resolves a built-in preset name (Q, Qi, Qsqrt2, Qsqrt-5 or their labels),
/// an inline JSON array or object, or a path to a JSON field file.
NumberField load_field(const std::string& spec, std::optional<int> class_number = std::nullopt,
                       int digits = hp::kDefaultDigits);

struct FieldPreset {
    std::string name;
    std::vector<std::int64_t> poly;
    int class_number;
    std::string label;
};
const std::vector<FieldPreset>& builtin_presets();

template <class Z>
Z height(const OElemT<Z>& a) {
    Z h = 0;
    for (const auto& x : a.c) {
        Z v = x < 0 ? Z(-x) : x;
        if (h < v) h = v;
    }
    return h;
}

template <class E>
auto height(const OPolyT<E>& f) {
    decltype(height(E{})) h = 0;
    for (const auto& x : f.a) {
        auto v = height(x);
        if (h < v) h = v;
    }
    return h;
}

/// Upper bound on |N(β)| over roots β ∈ O_K of f.
BigInt root_norm_bound(const NumberField& K, const OPoly& f);

/// Evaluates f at β exactly.
BigOElem evaluate(const NumberField& K, const BigOPoly& f, const BigOElem& beta);

/// Product of two monic polynomials.
BigOPoly multiply(const NumberField& K, const BigOPoly& f, const BigOPoly& g);
/// Quotient f / g when g divides f exactly (both monic), else nullopt.
std::optional<BigOPoly> divide_exact(const NumberField& K, const BigOPoly& f, const BigOPoly& g);

std::string to_string(const NumberField& K, const OElem& a);
std::string to_string(const NumberField& K, const BigOElem& a);
/// Coordinate vectors from α_0 up to the leading one, e.g. [[-1],[-1],[0],[1]].
std::string to_string(const NumberField& K, const BigOPoly& f);
std::string to_string(const NumberField& K, const OPoly& f);

/// Parses a monic polynomial written as a JSON array of coefficients from α_0
/// upwards. Coefficients are coordinate vectors or, over Q, plain integers.
/// The leading one may be included or left implicit when `degree` is given.
BigOPoly parse_poly(const NumberField& K, const std::string& json, std::optional<int> degree = std::nullopt);

}  // namespace vdw
