#include "vdw/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vdw/census.hpp"
#include "vdw/errors.hpp"
#include "vdw/primes.hpp"

namespace vdw {

hp::Real c_k_prime(const NumberField& K, int digits) {
    const hp::Bits bits = hp::digits_to_bits(digits);
    auto thetas = K.theta_embeddings(bits);
    hp::Real prod(1L, bits);
    for (const auto& t : thetas) {
        hp::Complex s{hp::Real(1L, bits), hp::Real(bits)};
        hp::Complex pw = s;
        for (int k = 1; k < K.degree(); ++k) {
            pw = pw * t;
            s += pw;
        }
        prod = prod * hp::abs(s);
    }
    return prod;
}

LinearFit c_k_fit(const NumberField& K, std::uint64_t x) {
    if (x < 4) throw ConfigError("c_k_fit needs x ≥ 4");
    auto ic = ideal_counts(K, x);
    const std::uint64_t lo = x / 2;
    // Running cumulative counts; fit y = a + b m over m ∈ [lo, x].
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::uint64_t cum = 0, cnt = 0;
    std::vector<std::uint64_t> ys;
    for (std::uint64_t m = 1; m <= x; ++m) {
        cum += ic.a[m];
        if (m < lo) continue;
        const long double xm = m, ym = cum;
        sx += xm;
        sy += ym;
        sxx += xm * xm;
        sxy += xm * ym;
        ++cnt;
        ys.push_back(cum);
    }
    const long double mx = sx / cnt, my = sy / cnt;
    const long double b = (sxy / cnt - mx * my) / (sxx / cnt - mx * mx);
    const long double a = my - b * mx;
    long double ss = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const long double r = static_cast<long double>(ys[i]) - (a + b * static_cast<long double>(lo + i));
        ss += r * r;
    }
    return {static_cast<double>(b), static_cast<double>(a), static_cast<double>(std::sqrt(ss / cnt))};
}

namespace {

/// |N(ν)| for small coordinates; exact for d ≤ 2 in integers.
std::uint64_t abs_norm(const NumberField& K, const OElem& v) {
    const auto& f = K.defining_poly();
    if (K.degree() == 1) return static_cast<std::uint64_t>(std::llabs(v.c[0]));
    if (K.degree() == 2) {
        const __int128 x = v.c[0], y = v.c[1];
        __int128 n = x * x - static_cast<__int128>(f[1]) * x * y + static_cast<__int128>(f[0]) * y * y;
        if (n < 0) n = -n;
        return static_cast<std::uint64_t>(n);
    }
    BigInt n = abs(K.norm(v));
    if (!fits_i64(n)) return UINT64_MAX;
    return static_cast<std::uint64_t>(to_i64(n));
}

}  // namespace

DSum d_nk(const NumberField& K, int n, std::uint64_t bound, double c_k) {
    if (n < 3) throw ConfigError("d_nk needs n ≥ 3");
    DSum out;
    out.bound = bound;
    const int d = K.degree();
    std::vector<std::int64_t> box;
    if (K.unit_rank() == 0) {
        const double rad = std::pow(static_cast<double>(bound), 1.0 / d) * (1.0 + 1e-12) + 1e-9;
        box = K.coordinate_box(std::vector<double>(d, rad));
    } else {
        const auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(bound), 1.0 / d) - 1e-9));
        box.assign(d, H);
    }
    std::int64_t hmax = 0;
    for (auto b : box) hmax = std::max(hmax, b);
    out.height = static_cast<std::uint64_t>(hmax);
    long double guard = 1;
    for (auto b : box) guard *= 2.0L * b + 1;
    if (guard > 1e9L) throw TooLarge("d_nk enumeration above 10^9 points");

    // Group terms by norm so the sum is taken in increasing order of size.
    std::map<std::uint64_t, std::uint64_t> by_norm;
    OElem v;
    for (int i = 0; i < d; ++i) v.c[i] = -box[i];
    while (true) {
        const std::uint64_t a = abs_norm(K, v);
        if (a > 1 && a < bound) ++by_norm[a];
        int pos = 0;
        while (pos < d && v.c[pos] == box[pos]) {
            v.c[pos] = -box[pos];
            ++pos;
        }
        if (pos == d) break;
        ++v.c[pos];
    }
    long double s = 0;
    for (auto it = by_norm.rbegin(); it != by_norm.rend(); ++it) {
        s += static_cast<long double>(it->second) * std::pow(static_cast<long double>(it->first), 1 - n);
        out.terms += it->second;
    }
    out.value = static_cast<double>(s);
    if (K.unit_rank() == 0 && c_k > 0 && bound > 1)
        out.tail = K.torsion() * c_k / K.class_number() * std::pow(static_cast<double>(bound), 2 - n) / (n - 2);
    return out;
}

double zeta_partial(const NumberField& K, double s, std::uint64_t x, double c_k) {
    if (s <= 1) throw ConfigError("zeta_partial needs s > 1");
    auto ic = ideal_counts(K, x);
    long double z = 0;
    for (std::uint64_t m = x; m >= 1; --m)
        if (ic.a[m]) z += ic.a[m] * std::pow(static_cast<long double>(m), -s);
    z += c_k * std::pow(static_cast<long double>(x), 1 - s) / (s - 1);
    return static_cast<double>(z);
}

namespace {

using RPoly = std::vector<Rational>;

Rational peval(const RPoly& p, const Rational& t) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RPoly pintegral(const RPoly& p) {
    RPoly r(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / static_cast<int>(i + 1);
    return r;
}

/// p(t + c) as a polynomial in t.
RPoly pshift(const RPoly& p, const Rational& c) {
    RPoly r(p.size(), Rational(0));
    for (std::size_t k = p.size(); k-- > 0;) {
        // r = r·(t + c) + p[k]
        RPoly next(p.size(), Rational(0));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) next[i + 1] += r[i];
        for (std::size_t i = 0; i < p.size(); ++i) next[i] += r[i] * c;
        next[0] += p[k];
        r = std::move(next);
    }
    return r;
}

RPoly padd(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

RPoly pneg(RPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

/// Piecewise polynomial on unit intervals [lo + i, lo + i + 1], zero outside.
struct Piecewise {
    int lo = 0;
    std::vector<RPoly> pieces;

    int hi() const { return lo + static_cast<int>(pieces.size()); }

    /// Antiderivative pieces vanishing at lo, and the total integral.
    std::pair<std::vector<RPoly>, Rational> antiderivative() const {
        std::vector<RPoly> F;
        Rational at = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            RPoly I = pintegral(pieces[i]);
            const Rational left(lo + static_cast<int>(i));
            I[0] += at - peval(I, left);
            at = peval(I, left + 1);
            F.push_back(std::move(I));
        }
        return {F, at};
    }

    /// Convolution with the indicator of [-1, 1].
    Piecewise convolve_box() const {
        auto [F, total] = antiderivative();
        auto F_piece = [&](int j) -> RPoly {
            if (j < lo) return RPoly{Rational(0)};
            if (j >= hi()) return RPoly{total};
            return F[j - lo];
        };
        Piecewise g;
        g.lo = lo - 1;
        for (int k = lo - 1; k < hi() + 1; ++k) {
            RPoly up = pshift(F_piece(k + 1), Rational(1));
            RPoly down = pshift(F_piece(k - 1), Rational(-1));
            g.pieces.push_back(padd(up, pneg(down)));
        }
        return g;
    }

    Rational integral(int a, int b) const {
        auto [F, total] = antiderivative();
        auto Fat = [&](int t) -> Rational {
            if (t <= lo) return 0;
            if (t >= hi()) return total;
            return peval(F[t - lo], Rational(t));
        };
        return Fat(b) - Fat(a);
    }
};

BigInt binom(int m, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

}  // namespace

Rational slab_volume(int n) {
    if (n < 2) throw ConfigError("slab volume needs n ≥ 2");
    Piecewise f;
    f.lo = -1;
    f.pieces = {RPoly{Rational(1)}, RPoly{Rational(1)}};
    for (int m = 2; m <= n - 1; ++m) f = f.convolve_box();
    return f.integral(-1, 1);
}

Rational irwin_hall_volume(int n) {
    if (n < 2) throw ConfigError("slab volume needs n ≥ 2");
    const int m = n - 1;
    BigInt fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    auto cdf = [&](const Rational& x) {
        Rational s = 0;
        for (int k = 0; k <= m && Rational(k) <= x; ++k) {
            Rational base = x - k, pw = 1;
            for (int i = 0; i < m; ++i) pw *= base;
            s += (k % 2 ? -1 : 1) * Rational(binom(m, k)) * pw;
        }
        return s / Rational(fact);
    };
    Rational v = cdf(Rational(m + 1, 2)) - cdf(Rational(m - 1, 2));
    return v * Rational(BigInt(1) << m);
}

KVolume k_nd(int n, int d, std::int64_t lattice_N) {
    if (n < 2 || d < 1) throw ConfigError("k_nd needs n ≥ 2 and d ≥ 1");
    if (n * d > 12) throw TooLarge("exact k_{n,d} limited to n·d ≤ 12");
    KVolume k;
    Rational v = slab_volume(n), w = irwin_hall_volume(n);
    k.exact = 1;
    k.irwin_hall = 1;
    for (int i = 0; i < d; ++i) {
        k.exact *= v;
        k.irwin_hall *= w;
    }
    if (lattice_N > 0) {
        k.lattice_N = lattice_N;
        BigInt L = L_count(CensusSpec{n, lattice_N, 1}, std::vector<std::int64_t>(d, 0));
        k.lattice = L.convert_to<double>() / std::pow(static_cast<double>(lattice_N), d * (n - 1));
    }
    return k;
}

ConstantBundle constant_bundle(const NumberField& K, int n, std::uint64_t D_bound, std::uint64_t c_k_x) {
    ConstantBundle b;
    b.field = K.label();
    b.n = n;
    b.h = K.class_number();
    auto fit = c_k_fit(K, c_k_x);
    b.c_k = fit.slope;
    b.c_k_residual = fit.rms_residual;
    b.c_k_x = c_k_x;
    hp::Real cp = c_k_prime(K);
    b.c_k_prime = cp.str(30);
    b.D = d_nk(K, n, D_bound, b.c_k);
    b.zeta = zeta_partial(K, n - 1, c_k_x, b.c_k);
    b.D_within_zeta = b.D.value <= b.zeta;
    const int d = K.degree();
    if (n * d <= 12) b.k = k_nd(n, d);
    const double base = b.c_k * cp.to_double() / b.h;
    b.formula_without_A = std::pow(2.0, d * (n - 1)) * (b.D.value * std::pow(base, n - 1) + 1.0);
    return b;
}

Theorem3Report theorem3_compare(const NumberField& K, int n, const std::vector<std::int64_t>& N_grid, unsigned workers) {
    if (K.class_number() != 1) throw ConfigError("theorem3_compare needs class number 1");
    if (N_grid.empty()) throw ConfigError("empty N grid");
    const int d = K.degree();
    Theorem3Report rep;
    rep.field = K.label();
    rep.n = n;
    rep.c_k = c_k_fit(K, 1000000).slope;
    rep.c_k_prime = c_k_prime(K).to_double();
    auto kv = k_nd(n, d, 0);
    rep.k_exact = kv.exact;
    const double k = rational_to_double(kv.exact);

    const std::int64_t Nmax = *std::max_element(N_grid.begin(), N_grid.end());
    CensusSpec top{n, Nmax, workers};
    const double units = static_cast<double>(T_units(K, top));
    const double L1 = L_count(top, std::vector<std::int64_t>(d, 1)).convert_to<double>();
    rep.A_hat = L1 > 0 ? units / L1 : 0.0;
    rep.A_N = Nmax;

    const double base = rep.c_k * rep.c_k_prime / K.class_number();
    for (std::int64_t N : N_grid) {
        Theorem3Row row;
        row.N = N;
        row.rho = rho(K, CensusSpec{n, N, workers}).rho;
        const double scale = std::pow(static_cast<double>(N), d * (n - 1));
        row.ratio = static_cast<double>(row.rho) / scale;
        const double bound = std::ceil(rep.c_k_prime * std::pow(static_cast<double>(N), d) - 1e-9);
        row.D = d_nk(K, n, static_cast<std::uint64_t>(std::max(bound, 2.0))).value;
        row.formula = std::pow(2.0, d * (n - 1)) * (row.D * std::pow(base, n - 1) + 1.0) + rep.A_hat * k;
        row.gap = std::abs(row.ratio - row.formula);
        rep.rows.push_back(row);
    }
    bool up = true, down = true, shrink = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        up = up && rep.rows[i].ratio >= rep.rows[i - 1].ratio;
        down = down && rep.rows[i].ratio <= rep.rows[i - 1].ratio;
        shrink = shrink && rep.rows[i].gap < rep.rows[i - 1].gap;
    }
    rep.ratio_monotone = up || down;
    rep.gap_decreasing = shrink;
    return rep;
}

}  // namespace vdw
