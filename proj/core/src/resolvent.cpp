#include "vdw/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "vdw/errors.hpp"
#include "vdw/galois.hpp"
#include "vdw/ring.hpp"

namespace vdw {

namespace {

struct OKRing {
    const NumberField* K;
    using T = BigOElem;
    T zero() const { return {}; }
    T one() const { return to_big(K->one()); }
    T add(const T& a, const T& b) const { return K->add(a, b); }
    T sub(const T& a, const T& b) const { return K->sub(a, b); }
    T mul(const T& a, const T& b) const { return K->mul(a, b); }
    T neg(const T& a) const { return K->neg(a); }
};

struct MPolyRing {
    int nvars;
    using T = MPoly;
    T zero() const { return MPoly::constant(nvars, 0); }
    T one() const { return MPoly::constant(nvars, 1); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
};

}  // namespace

BigOElem poly_disc(const NumberField& K, const BigOPoly& f) {
    std::vector<BigOElem> c = f.a;
    c.push_back(to_big(K.one()));
    if (K.degree() == 1 && f.degree() == 3) {
        // -4p^3 - 27q^2 form for X^3 + aX^2 + bX + c, avoiding the 5x5 determinant.
        const BigInt& a = c[2].c[0];
        const BigInt& b = c[1].c[0];
        const BigInt& cc = c[0].c[0];
        BigOElem r;
        r.c[0] = a * a * b * b - 4 * b * b * b - 4 * a * a * a * cc - 27 * cc * cc + 18 * a * b * cc;
        return r;
    }
    return monic_discriminant(OKRing{&K}, c);
}

BigOElem poly_disc(const NumberField& K, const OPoly& f) { return poly_disc(K, to_big(f)); }

// ---------------------------------------------------------------------------

MPoly MPoly::constant(int nvars, const BigInt& c) {
    MPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    MPoly p;
    p.nvars = nvars;
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms[e] = 1;
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms) {
        auto& v = r.terms[e];
        v += c;
        if (v == 0) r.terms.erase(e);
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    r.nvars = nvars;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            auto& v = r.terms[e];
            v += c1 * c2;
            if (v == 0) r.terms.erase(e);
        }
    return r;
}

MPoly MPoly::divide(const BigInt& c) const {
    MPoly r = *this;
    for (auto& [e, v] : r.terms) {
        if (v % c != 0) throw Error("inexact coefficient division");
        v /= c;
    }
    return r;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;
}

MPoly MPoly::coefficient(int var, int k) const {
    MPoly r;
    r.nvars = nvars;
    for (const auto& [e, c] : terms)
        if (e[var] == k) {
            auto e2 = e;
            e2[var] = 0;
            r.terms[e2] = c;
        }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool mono = false;
        std::ostringstream m;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (mono) m << "*";
            m << names[i];
            if (e[i] > 1) m << "^" << e[i];
            mono = true;
        }
        if (!mono) os << mag;
        else if (mag == 1) os << m.str();
        else os << mag << "*" << m.str();
    }
    return os.str();
}

IteratedDisc iterated_disc(int n, const std::vector<std::optional<std::int64_t>>& fixed) {
    if (n < 1) throw ConfigError("degree must be at least 1");
    if (n > 5) throw TooLarge("iterated discriminant limited to n ≤ 5");
    if (static_cast<int>(fixed.size()) != n - 1) throw ConfigError("need one entry per coefficient α_1..α_{n-1}");
    IteratedDisc out;
    out.n = n;
    std::vector<int> var_of(n, -1);
    int nvars = 1;
    out.names.push_back("a0");
    for (int k = 1; k < n; ++k)
        if (!fixed[k - 1]) {
            var_of[k] = nvars++;
            out.names.push_back("a" + std::to_string(k));
        }
    MPolyRing R{nvars};
    std::vector<MPoly> coeffs;
    coeffs.push_back(MPoly::variable(nvars, 0));
    for (int k = 1; k < n; ++k)
        coeffs.push_back(fixed[k - 1] ? MPoly::constant(nvars, *fixed[k - 1]) : MPoly::variable(nvars, var_of[k]));
    coeffs.push_back(R.one());
    out.disc_f = monic_discriminant(R, coeffs);

    const int m = out.disc_f.degree_in(0);
    if (m <= 1) {
        out.D = R.one();
        return out;
    }
    std::vector<MPoly> g(m + 1), dg(m);
    for (int j = 0; j <= m; ++j) g[j] = out.disc_f.coefficient(0, j);
    for (int j = 1; j <= m; ++j) dg[j - 1] = g[j] * MPoly::constant(nvars, j);
    const MPoly& lc = g[m];
    if (lc.terms.size() != 1 || lc.terms.begin()->first != std::vector<int>(nvars, 0))
        throw Error("leading coefficient in α_0 is not constant");
    MPoly res = resultant(R, g, dg);
    MPoly D = res.divide(lc.terms.begin()->second);
    if ((m * (m - 1) / 2) % 2 == 1) D = -D;
    if (D.is_zero()) throw DegenerateFamily("iterated discriminant vanishes identically");
    out.D = D;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct CosetData {
    std::vector<Perm> group;
    std::vector<Perm> cosets;
};

CosetData cosets_of(const std::vector<Perm>& gens, int n) {
    CosetData cd;
    cd.group = perm_closure(gens, n);
    std::set<Perm> covered;
    for (const auto& s : all_perms(n)) {
        if (covered.count(s)) continue;
        cd.cosets.push_back(s);
        for (const auto& t : cd.group) covered.insert(perm_compose(s, t));
    }
    return cd;
}

}  // namespace

Resolvent build_resolvent(const NumberField& K, const BigOPoly& f, const std::string& group) {
    const int n = f.degree();
    if (n < 1) throw ConfigError("resolvent needs degree ≥ 1");
    if (n > 5) throw TooLarge("resolvents limited to n ≤ 5");
    if (n >= 2 && poly_disc(K, f).is_zero()) throw ConfigError("f has repeated roots; the resolvent is undefined");
    Resolvent r;
    r.group = group;
    r.generators = named_group_generators(group, n);
    auto cd = cosets_of(r.generators, n);
    r.group_order = static_cast<int>(cd.group.size());
    r.cosets = cd.cosets;
    const int m = static_cast<int>(cd.cosets.size());
    const int d = K.degree();

    // Size the precision from the coefficient magnitude: |θ_σ| ≤ |G| B^{n(n+1)/2}.
    double B = 1.0;
    for (int i = 0; i < d; ++i) {
        std::vector<std::complex<double>> c;
        for (int k = 0; k < n; ++k) c.push_back(K.embed(f.a[k], i).to_double());
        for (const auto& z : hp::roots_double(c)) B = std::max(B, std::abs(z));
    }
    const double log_theta = std::log10(static_cast<double>(r.group_order)) + n * (n + 1) / 2.0 * std::log10(B);
    int digits = 30 + static_cast<int>(std::ceil(m * (log_theta + std::log10(2.0)))) + 2 * n;

    for (int attempt = 0; attempt < 4; ++attempt, digits *= 2) {
        const hp::Bits bits = hp::digits_to_bits(digits);
        auto thetas = K.theta_embeddings(bits);
        auto vinv = K.vinv(thetas);
        r.roots.assign(d, {});
        r.phi_numeric.assign(d, {});
        for (int i = 0; i < d; ++i) {
            std::vector<hp::Complex> c;
            for (int k = 0; k < n; ++k) c.push_back(K.embed(f.a[k], i, thetas));
            auto rs = hp::roots(c);
            hp::sort_roots(rs);
            // pw[j][e] = β_j^e
            std::vector<std::vector<hp::Complex>> pw(n, std::vector<hp::Complex>(n + 1));
            for (int j = 0; j < n; ++j) {
                pw[j][0] = hp::Complex{hp::Real(1L, bits), hp::Real(bits)};
                for (int e = 1; e <= n; ++e) pw[j][e] = pw[j][e - 1] * rs[j];
            }
            std::vector<hp::Complex> prod{hp::Complex{hp::Real(1L, bits), hp::Real(bits)}};
            for (const auto& s : cd.cosets) {
                hp::Complex theta(bits);
                for (const auto& t : cd.group) {
                    hp::Complex term = pw[s[t[0]]][1];
                    for (int k = 1; k < n; ++k) term = term * pw[s[t[k]]][k + 1];
                    theta += term;
                }
                std::vector<hp::Complex> next(prod.size() + 1, hp::Complex(bits));
                for (std::size_t j = 0; j < prod.size(); ++j) {
                    next[j + 1] += prod[j];
                    next[j] -= prod[j] * theta;
                }
                prod = std::move(next);
            }
            prod.pop_back();
            r.roots[i] = std::move(rs);
            r.phi_numeric[i] = std::move(prod);
        }
        r.phi.a.assign(m, BigOElem{});
        double residual = 0.0;
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < d; ++c) {
                hp::Complex s(bits);
                for (int i = 0; i < d; ++i) s += vinv[c][i] * r.phi_numeric[i][j];
                BigInt v = s.re.round();
                residual = std::max(residual, (hp::abs(s.re - hp::Real(v, bits))).to_double());
                residual = std::max(residual, hp::abs(s.im).to_double());
                r.phi.a[j].c[c] = v;
            }
        r.residual = residual;
        r.digits = digits;
        if (residual < 1e-6) return r;
    }
    if (r.residual < 1e-2)
        throw PrecisionExhausted("resolvent rounding ambiguous (residual " + std::to_string(r.residual) + ")");
    throw Error("resolvent coefficients failed to round to O_K (residual " + std::to_string(r.residual) + ")");
}

bool resolvent_has_root(const FactorSearch& fs, const Resolvent& r) { return !fs.roots(r.phi).empty(); }

bool resolvent_has_root(const NumberField& K, const Resolvent& r) { return resolvent_has_root(FactorSearch(K), r); }

bool resolvent_is_squarefree(const NumberField& K, const Resolvent& r) {
    return r.phi.degree() < 2 || !poly_disc(K, r.phi).is_zero();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    if (cnt < 2) return 0.0;
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

namespace {

std::string canonical_group(const std::string& g, int n) {
    std::string s = g;
    s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
    if (n == 3 && (s == "C3" || s == "A3")) return "A3";
    if (n == 2 && (s == "S2" || s == "C2")) return "C2";
    return s;
}

/// Exact classification counts for cubics over Q: reducibility from the
/// linear-factor scan, then the discriminant square test.
std::uint64_t count_cubics_over_Q(const NumberField& K, std::int64_t N, const std::string& target) {
    CensusSpec spec{3, N, 1};
    auto scan = scan_linear_factors(K, spec, true);
    PolyIndexer idx(3, 1, N);
    std::uint64_t count = 0;
    enumerate(K, spec, [&](const OPoly& f) {
        if (scan.hits.test(idx.index(f))) return;
        const std::int64_t c = f.a[0].c[0], b = f.a[1].c[0], a = f.a[2].c[0];
        const __int128 disc = static_cast<__int128>(a) * a * b * b - 4 * static_cast<__int128>(b) * b * b -
                              4 * static_cast<__int128>(a) * a * a * c - 27 * static_cast<__int128>(c) * c +
                              18 * static_cast<__int128>(a) * b * c;
        bool square = false;
        if (disc >= 0) {
            auto s = static_cast<__int128>(std::sqrt(static_cast<long double>(disc)));
            while (s * s > disc) --s;
            while ((s + 1) * (s + 1) <= disc) ++s;
            square = s * s == disc;
        }
        const char* label = square ? "A3" : "S3";
        if (target == label) ++count;
    });
    return count;
}

}  // namespace

Theorem2Report theorem2_sweep(const NumberField& K, int n, const std::string& group,
                              const std::vector<std::int64_t>& N_grid, unsigned workers) {
    if (n < 3 || n > 4) throw ConfigError("theorem2 sweeps cover n ∈ {3, 4}");
    Theorem2Report rep;
    rep.field = K.label();
    rep.n = n;
    rep.group = canonical_group(group, n);
    const auto G = perm_closure(named_group_generators(rep.group, n), n);
    if (!is_transitive(G, n)) throw ConfigError("group " + group + " is not transitive");
    int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    rep.index = nfact / static_cast<int>(G.size());
    rep.bound_exponent = K.degree() * (n - 1 + 1.0 / rep.index);

    for (std::int64_t N : N_grid) {
        Theorem2Row row;
        row.N = N;
        CensusSpec spec{n, N, workers};
        row.population = population(K, spec);
        if (n == 3 && K.degree() == 1) {
            row.count = count_cubics_over_Q(K, N, rep.group);
        } else {
            struct State {
                std::unique_ptr<FactorSearch> fs;
                std::uint64_t count = 0;
            };
            auto st = enumerate_parallel<State>(
                K, spec, [&] { return State{std::make_unique<FactorSearch>(K), 0}; },
                [&](State& s, const OPoly& f) {
                    auto g = galois_group_small(K, *s.fs, to_big(f));
                    if (g && *g == rep.group) ++s.count;
                },
                [](State& a, const State& b) { a.count += b.count; });
            row.count = st.count;
        }
        rep.rows.push_back(row);
    }
    std::vector<double> xs, ys;
    for (const auto& r : rep.rows) {
        xs.push_back(static_cast<double>(r.N));
        ys.push_back(static_cast<double>(r.count));
    }
    rep.slope = loglog_slope(xs, ys);
    rep.slope_ok = rep.slope <= rep.bound_exponent + 0.25;
    return rep;
}

ResolventAgreement a3_resolvent_agreement(const NumberField& K, std::int64_t N, unsigned workers) {
    CensusSpec spec{3, N, workers};
    struct State {
        std::unique_ptr<FactorSearch> fs;
        ResolventAgreement r;
    };
    auto st = enumerate_parallel<State>(
        K, spec, [&] { return State{std::make_unique<FactorSearch>(K), {}}; },
        [&](State& s, const OPoly& f) {
            if (f.a[0].is_zero()) return;
            const BigOPoly F = to_big(f);
            const BigOElem disc = poly_disc(K, F);
            if (disc.is_zero()) return;
            auto res = build_resolvent(K, F, "A3");
            const bool root = resolvent_has_root(*s.fs, res);
            BigOPoly sq;
            sq.a = {K.neg(disc), BigOElem{}};
            const bool square = !s.fs->roots(sq).empty();
            ++s.r.checked;
            if (root) ++s.r.with_root;
            if (square) ++s.r.square_disc;
            if (root != square) ++s.r.mismatches;
            s.r.max_residual = std::max(s.r.max_residual, res.residual);
        },
        [](State& a, const State& b) {
            a.r.checked += b.r.checked;
            a.r.with_root += b.r.with_root;
            a.r.square_disc += b.r.square_disc;
            a.r.mismatches += b.r.mismatches;
            a.r.max_residual = std::max(a.r.max_residual, b.r.max_residual);
        });
    return st.r;
}

}  // namespace vdw
