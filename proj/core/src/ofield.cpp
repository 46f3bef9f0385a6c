#include "vdw/ofield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vdw/errors.hpp"
#include "vdw/zpoly.hpp"

namespace vdw {

BigOElem to_big(const OElem& a) {
    BigOElem r;
    for (int i = 0; i < kMaxDegree; ++i) r.c[i] = a.c[i];
    return r;
}

OElem to_small(const BigOElem& a) {
    OElem r;
    for (int i = 0; i < kMaxDegree; ++i) {
        if (!fits_i64(a.c[i])) throw TooLarge("coordinate exceeds 64 bits: " + a.c[i].str());
        r.c[i] = to_i64(a.c[i]);
    }
    return r;
}

BigOPoly to_big(const OPoly& f) {
    BigOPoly g;
    g.a.reserve(f.a.size());
    for (const auto& x : f.a) g.a.push_back(to_big(x));
    return g;
}

namespace {

std::vector<std::vector<hp::Complex>> invert(std::vector<std::vector<hp::Complex>> m, hp::Bits bits) {
    const std::size_t n = m.size();
    std::vector<std::vector<hp::Complex>> inv(n, std::vector<hp::Complex>(n, hp::Complex(bits)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i].re = hp::Real(1L, bits);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (hp::abs(m[r][col]) > hp::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        hp::Complex p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            hp::Complex f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<hp::Complex> poly_roots(const std::vector<std::int64_t>& poly, hp::Bits bits) {
    const int d = static_cast<int>(poly.size()) - 1;
    std::vector<hp::Complex> coeffs;
    for (int k = 0; k < d; ++k) coeffs.emplace_back(hp::Real(static_cast<long>(poly[k]), bits), hp::Real(bits));
    double corr = 0.0;
    auto rs = hp::roots(coeffs, &corr);
    hp::Real tol(std::ldexp(1.0, -static_cast<int>(bits / 2)), bits);
    for (auto& z : rs) {
        if (hp::abs(z.im) < tol * (hp::Real(1L, bits) + hp::abs(z.re))) z.im = hp::Real(bits);
        if (hp::abs(z.re) < tol * (hp::Real(1L, bits) + hp::abs(z.im))) z.re = hp::Real(bits);
    }
    std::sort(rs.begin(), rs.end(), [&](const hp::Complex& a, const hp::Complex& b) {
        hp::Real dr = a.re - b.re;
        if (hp::abs(dr) > tol) return dr.sign() > 0;
        return (a.im - b.im).sign() > 0;
    });
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (hp::abs(rs[i] - rs[j]) < tol) throw PrecisionExhausted("roots of defining polynomial not separated");
    return rs;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

NumberField::NumberField(std::vector<std::int64_t> defining_poly, int class_number, std::string label, int digits)
    : poly_(std::move(defining_poly)), h_(class_number), label_(std::move(label)), bits_(hp::digits_to_bits(digits)) {
    while (!poly_.empty() && poly_.back() == 0) poly_.pop_back();
    if (poly_.size() < 2) throw ConfigError("defining polynomial must have degree at least 1");
    if (poly_.back() != 1) throw ConfigError("defining polynomial must be monic");
    d_ = static_cast<int>(poly_.size()) - 1;
    if (d_ > kMaxDegree) throw ConfigError("field degree above " + std::to_string(kMaxDegree) + " unsupported");
    if (h_ < 1) throw ConfigError("class number must be positive");
    if (digits < 20) throw ConfigError("precision below 20 digits");

    ZPoly zp(poly_.begin(), poly_.end());
    if (zis_reducible_monic(zp)) throw ReduciblePolynomial("defining polynomial " + zto_string(zp) + " is reducible");
    disc_ = zdisc_monic(zp);

    red_.assign(d_ > 1 ? d_ - 1 : 0, {});
    if (d_ > 1) {
        std::array<std::int64_t, kMaxDegree> cur{};
        for (int i = 0; i < d_; ++i) cur[i] = -poly_[i];
        red_[0] = cur;
        for (int j = 1; j < d_ - 1; ++j) {
            std::array<std::int64_t, kMaxDegree> next{};
            std::int64_t top = cur[d_ - 1];
            for (int i = d_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            for (int i = 0; i < d_; ++i) next[i] += top * (-poly_[i]);
            red_[j] = next;
            cur = next;
        }
    }

    theta_ = poly_roots(poly_, bits_);
    for (const auto& z : theta_) (z.im.is_zero() ? r1_ : r2_)++;
    r2_ /= 2;

    basis_double_.assign(d_, std::vector<std::complex<double>>(d_));
    coord_bound_.assign(d_, 0.0);
    for (int i = 0; i < d_; ++i) {
        std::complex<double> t = theta_[i].to_double(), p = 1.0;
        for (int j = 0; j < d_; ++j) {
            basis_double_[i][j] = p;
            coord_bound_[i] += std::abs(p);
            p *= t;
        }
    }
    auto vi = vinv(theta_);
    vinv_.assign(d_, std::vector<std::complex<double>>(d_));
    for (int j = 0; j < d_; ++j)
        for (int i = 0; i < d_; ++i) vinv_[j][i] = vi[j][i].to_double();

    // Roots of unity: every conjugate has modulus one.
    w_ = 0;
    auto box = coordinate_box(std::vector<double>(d_, 1.0));
    std::vector<std::int64_t> cur(d_);
    for (int i = 0; i < d_; ++i) cur[i] = -box[i];
    while (true) {
        OElem a;
        for (int i = 0; i < d_; ++i) a.c[i] = cur[i];
        bool unit_circle = !a.is_zero();
        for (int i = 0; i < d_ && unit_circle; ++i)
            if (std::abs(std::abs(embed_double(a, i)) - 1.0) > 1e-9) unit_circle = false;
        if (unit_circle && abs(norm(a)) == 1) ++w_;
        int pos = 0;
        while (pos < d_ && cur[pos] == box[pos]) {
            cur[pos] = -box[pos];
            ++pos;
        }
        if (pos == d_) break;
        ++cur[pos];
    }
    if (label_.empty()) label_ = "Q[X]/(" + zto_string(zp) + ")";
}

OElem NumberField::theta() const {
    OElem e;
    if (d_ == 1) e.c[0] = -poly_[0];
    else e.c[1] = 1;
    return e;
}

OElem NumberField::mul(const OElem& a, const OElem& b) const {
    if (d_ == 1) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.c[0], b.c[0], &r)) throw TooLarge("64-bit overflow in multiplication");
        OElem e;
        e.c[0] = r;
        return e;
    }
    __int128 conv[2 * kMaxDegree] = {};
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) conv[i + j] += static_cast<__int128>(a.c[i]) * b.c[j];
    OElem r;
    for (int i = 0; i < d_; ++i) {
        __int128 acc = conv[i];
        for (int j = 0; j + d_ < 2 * d_ - 1; ++j) acc += conv[d_ + j] * red_[j][i];
        if (acc > INT64_MAX || acc < INT64_MIN) throw TooLarge("64-bit overflow in multiplication");
        r.c[i] = static_cast<std::int64_t>(acc);
    }
    return r;
}

BigOElem NumberField::mul(const BigOElem& a, const BigOElem& b) const {
    std::vector<BigInt> conv(2 * d_ - 1);
    for (int i = 0; i < d_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < d_; ++j)
            if (b.c[j] != 0) conv[i + j] += a.c[i] * b.c[j];
    }
    BigOElem r;
    for (int i = 0; i < d_; ++i) {
        r.c[i] = conv[i];
        for (int j = 0; j + d_ < 2 * d_ - 1; ++j)
            if (conv[d_ + j] != 0 && red_[j][i] != 0) r.c[i] += conv[d_ + j] * red_[j][i];
    }
    return r;
}

std::vector<std::vector<BigInt>> NumberField::mul_matrix(const BigOElem& a) const {
    std::vector<std::vector<BigInt>> m(d_, std::vector<BigInt>(d_));
    BigOElem col = a;
    BigOElem th = to_big(theta());
    for (int j = 0; j < d_; ++j) {
        for (int i = 0; i < d_; ++i) m[i][j] = col.c[i];
        if (j + 1 < d_) col = mul(col, th);
    }
    return m;
}

BigInt NumberField::norm(const OElem& a) const {
    if (d_ == 1) return BigInt(a.c[0]);
    if (d_ == 2) {
        // det [[a0, -c0 a1], [a1, a0 - c1 a1]]
        BigInt a0 = a.c[0], a1 = a.c[1];
        return a0 * (a0 - BigInt(poly_[1]) * a1) + BigInt(poly_[0]) * a1 * a1;
    }
    return norm(to_big(a));
}

BigInt NumberField::norm(const BigOElem& a) const {
    if (d_ == 1) return a.c[0];
    return bareiss_det(mul_matrix(a));
}

std::optional<BigOElem> NumberField::div_exact(const BigOElem& a, const BigOElem& b) const {
    if (b.is_zero()) return std::nullopt;
    // Solve M_b x = a over Q by fraction-free elimination.
    auto m = mul_matrix(b);
    std::vector<std::vector<Rational>> aug(d_, std::vector<Rational>(d_ + 1));
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) aug[i][j] = Rational(m[i][j]);
        aug[i][d_] = Rational(a.c[i]);
    }
    for (int col = 0; col < d_; ++col) {
        int piv = col;
        while (piv < d_ && aug[piv][col] == 0) ++piv;
        if (piv == d_) return std::nullopt;
        std::swap(aug[col], aug[piv]);
        for (int r = 0; r < d_; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col] / aug[col][col];
            for (int j = col; j <= d_; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    BigOElem x;
    for (int i = 0; i < d_; ++i) {
        Rational v = aug[i][d_] / aug[i][i];
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        x.c[i] = boost::multiprecision::numerator(v);
    }
    return x;
}

std::vector<hp::Complex> NumberField::theta_embeddings(hp::Bits bits) const {
    if (bits == bits_) return theta_;
    return poly_roots(poly_, bits);
}

hp::Complex NumberField::embed(const BigOElem& a, int i) const { return embed(a, i, theta_); }

hp::Complex NumberField::embed(const BigOElem& a, int i, const std::vector<hp::Complex>& thetas) const {
    const hp::Complex& t = thetas[i];
    hp::Bits b = t.bits();
    hp::Complex acc(b);
    for (int k = d_ - 1; k >= 0; --k) {
        acc *= t;
        acc.re += hp::Real(a.c[k], b);
    }
    return acc;
}

std::complex<double> NumberField::embed_double(const OElem& a, int i) const {
    std::complex<double> s = 0.0;
    for (int j = 0; j < d_; ++j) s += static_cast<double>(a.c[j]) * basis_double_[i][j];
    return s;
}

std::vector<std::vector<hp::Complex>> NumberField::vinv(const std::vector<hp::Complex>& thetas) const {
    hp::Bits b = thetas.front().bits();
    std::vector<std::vector<hp::Complex>> v(d_, std::vector<hp::Complex>(d_, hp::Complex(b)));
    for (int i = 0; i < d_; ++i) {
        hp::Complex p{hp::Real(1L, b), hp::Real(b)};
        for (int j = 0; j < d_; ++j) {
            v[i][j] = p;
            p *= thetas[i];
        }
    }
    return invert(std::move(v), b);
}

std::vector<std::int64_t> NumberField::coordinate_box(const std::vector<double>& radius) const {
    std::vector<std::int64_t> box(d_);
    for (int j = 0; j < d_; ++j) {
        double s = 0.0;
        for (int i = 0; i < d_; ++i) s += std::abs(vinv_[j][i]) * radius[i];
        box[j] = static_cast<std::int64_t>(std::floor(s * (1.0 + 1e-12) + 1e-9));
    }
    return box;
}

std::string NumberField::basis_description() const {
    std::ostringstream os;
    os << "power basis 1";
    for (int j = 1; j < d_; ++j) os << ", t" << (j > 1 ? "^" + std::to_string(j) : "");
    os << " with t a root of " << zto_string(ZPoly(poly_.begin(), poly_.end()), "t");
    return os.str();
}

NumberField make_field(const std::vector<std::int64_t>& defining_poly, int class_number, const std::string& label,
                       int digits) {
    return NumberField(defining_poly, class_number, label, digits);
}

const std::vector<FieldPreset>& builtin_presets() {
    static const std::vector<FieldPreset> presets = {
        {"Q", {0, 1}, 1, "Q"},
        {"Qi", {1, 0, 1}, 1, "Q(i)"},
        {"Qsqrt2", {-2, 0, 1}, 1, "Q(sqrt2)"},
        {"Qsqrt-5", {5, 0, 1}, 2, "Q(sqrt-5)"},
    };
    return presets;
}

namespace {

NumberField field_from_json(const nlohmann::json& j, std::optional<int> class_number, int digits) {
    std::vector<std::int64_t> poly;
    int h = 1;
    std::string label;
    try {
        if (j.is_array()) {
            poly = j.get<std::vector<std::int64_t>>();
        } else if (j.is_object()) {
            poly = j.at("defining_poly").get<std::vector<std::int64_t>>();
            h = j.value("class_number", 1);
            label = j.value("label", std::string{});
        } else {
            throw ConfigError("field JSON must be an array or object");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad field JSON: ") + e.what());
    }
    if (class_number) h = *class_number;
    return NumberField(poly, h, label, digits);
}

}  // namespace

NumberField load_field(const std::string& spec, std::optional<int> class_number, int digits) {
    for (const auto& p : builtin_presets())
        if (spec == p.name || spec == p.label)
            return NumberField(p.poly, class_number.value_or(p.class_number), p.label, digits);
    if (!spec.empty() && (spec.front() == '[' || spec.front() == '{')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(spec);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("bad inline field JSON: ") + e.what());
        }
        return field_from_json(j, class_number, digits);
    }
    std::ifstream in(spec);
    if (!in) throw ConfigError("unknown field preset or unreadable file: " + spec);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad field file: ") + e.what());
    }
    return field_from_json(j, class_number, digits);
}

BigInt root_norm_bound(const NumberField& K, const OPoly& f) {
    const int n = f.degree();
    const int d = K.degree();
    hp::Bits b = K.bits();
    hp::Real prod(1L, b);
    for (int i = 0; i < d; ++i) {
        hp::Real best(b);
        for (int k = 1; k <= n; ++k) {
            hp::Real m = hp::abs(K.embed(to_big(f.a[n - k]), i));
            if (m.is_zero()) continue;
            hp::Real r = hp::root(m, static_cast<unsigned long>(k));
            if (best < r) best = r;
        }
        prod *= best;
    }
    if (prod.is_zero()) return 0;
    hp::Real two(2L, b);
    hp::Real c = hp::Real(1L, b) / (hp::root(two, static_cast<unsigned long>(n)) - hp::Real(1L, b));
    hp::Real bound = hp::pow(c, d) * prod;
    return bound.ceil();
}

BigOElem evaluate(const NumberField& K, const BigOPoly& f, const BigOElem& beta) {
    BigOElem acc;
    acc.c[0] = 1;
    for (int k = f.degree() - 1; k >= 0; --k) acc = K.add(K.mul(acc, beta), f.a[k]);
    return acc;
}

BigOPoly multiply(const NumberField& K, const BigOPoly& f, const BigOPoly& g) {
    const int n = f.degree(), m = g.degree();
    // Full coefficient lists with the leading one appended.
    std::vector<BigOElem> a(f.a), b(g.a);
    BigOElem one;
    one.c[0] = 1;
    a.push_back(one);
    b.push_back(one);
    std::vector<BigOElem> c(n + m + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
    c.pop_back();
    return BigOPoly{c};
}

std::optional<BigOPoly> divide_exact(const NumberField& K, const BigOPoly& f, const BigOPoly& g) {
    const int n = f.degree(), m = g.degree();
    if (m > n) return std::nullopt;
    std::vector<BigOElem> rem(f.a);
    BigOElem one;
    one.c[0] = 1;
    rem.push_back(one);
    std::vector<BigOElem> q(n - m + 1);
    for (int i = n; i >= m; --i) {
        const BigOElem c = rem[i];
        q[i - m] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j < m; ++j) rem[i - m + j] = K.sub(rem[i - m + j], K.mul(c, g.a[j]));
        rem[i] = BigOElem{};
    }
    for (int i = 0; i < m; ++i)
        if (!rem[i].is_zero()) return std::nullopt;
    q.pop_back();
    return BigOPoly{q};
}

std::string to_string(const NumberField& K, const BigOElem& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < K.degree(); ++i) os << (i ? "," : "") << a.c[i];
    os << "]";
    return os.str();
}

std::string to_string(const NumberField& K, const OElem& a) { return to_string(K, to_big(a)); }

std::string to_string(const NumberField& K, const BigOPoly& f) {
    std::string s = "[";
    for (const auto& a : f.a) s += to_string(K, a) + ",";
    return s + to_string(K, to_big(K.one())) + "]";
}

std::string to_string(const NumberField& K, const OPoly& f) { return to_string(K, to_big(f)); }

BigOPoly parse_poly(const NumberField& K, const std::string& json, std::optional<int> degree) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("polynomial is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw ConfigError("polynomial must be a non-empty JSON array");
    const int d = K.degree();
    std::vector<BigOElem> coeffs;
    for (const auto& c : j) {
        BigOElem e;
        auto read = [](const nlohmann::json& v) -> BigInt {
            if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
            if (v.is_string()) return BigInt(v.get<std::string>());
            throw ConfigError("polynomial coefficients must be integers");
        };
        if (c.is_array()) {
            if (static_cast<int>(c.size()) > d) throw ConfigError("coefficient has more coordinates than the field degree");
            for (std::size_t i = 0; i < c.size(); ++i) e.c[i] = read(c[i]);
        } else {
            e.c[0] = read(c);
        }
        coeffs.push_back(e);
    }
    const BigOElem one = to_big(K.one());
    BigOPoly f;
    if (degree && static_cast<int>(coeffs.size()) == *degree) {
        f.a = coeffs;
    } else {
        if (!(coeffs.back() == one)) throw ConfigError("polynomial must be monic (leading coefficient 1)");
        coeffs.pop_back();
        f.a = coeffs;
        if (degree && f.degree() != *degree) throw ConfigError("polynomial degree does not match --n");
    }
    return f;
}

}  // namespace vdw
