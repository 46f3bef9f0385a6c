#include "vdw/sievestats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "vdw/densities.hpp"
#include "vdw/errors.hpp"

namespace vdw {

namespace {

int type_index(const std::vector<SplittingType>& types, const SplittingType& r) {
    auto it = std::lower_bound(types.begin(), types.end(), r);
    if (it == types.end() || !(*it == r)) throw ConfigError("splitting type " + r.str() + " does not match the degree");
    return static_cast<int>(it - types.begin());
}

void check_x(std::uint64_t x) {
    if (x > 10000000ULL) throw TooLarge("prime cutoff x above 10^7");
}

}  // namespace

std::uint64_t pi_f_r(const NumberField& K, const OPoly& f, const SplittingType& r, std::uint64_t x) {
    if (x < 2) return 0;
    check_x(x);
    ReductionTable table(K, f.degree(), x);
    const int want = type_index(table.types(), r);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table.classify(f, i) == want) ++c;
    return c;
}

std::uint64_t pi_f(const NumberField& K, const OPoly& f, std::uint64_t x) {
    if (x < 2) return 0;
    check_x(x);
    ReductionTable table(K, f.degree(), x);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        int t = table.classify(f, i);
        if (t >= 0) c += static_cast<std::uint64_t>(table.types()[t].at(1));
    }
    return c;
}

std::uint64_t default_sieve_x(const NumberField& K, std::int64_t N) {
    double v = std::ceil(std::pow(static_cast<double>(N), K.degree() / 2.0) - 1e-9);
    return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(v));
}

DeviationReport deviation_sweep(const NumberField& K, const CensusSpec& spec, const SplittingType& r, std::uint64_t x,
                                bool keep_rows) {
    check_x(x);
    DeviationReport rep;
    rep.spec = spec;
    rep.r = r;
    rep.x = x;
    rep.population = population(K, spec);
    rep.pi_K = pi_K(K, x);
    rep.delta = delta_r(r);
    ReductionTable table(K, spec.n, std::max<std::uint64_t>(x, 2));
    const int want = x >= 2 ? type_index(table.types(), r) : -2;
    if (x < 2) type_index(all_splitting_types(spec.n), r);
    const double expected = rational_to_double(rep.delta) * static_cast<double>(rep.pi_K);
    rep.threshold = x >= 2 ? std::sqrt(static_cast<double>(x)) * std::log(static_cast<double>(x)) : 0.0;
    const std::size_t nprimes = x >= 2 ? table.size() : 0;

    struct State {
        double sum_sq = 0.0;
        std::uint64_t exceptional = 0;
        std::vector<DeviationRow> rows;
    };
    const bool rows = keep_rows;
    auto st = enumerate_parallel<State>(
        K, spec, [] { return State{}; },
        [&](State& s, const OPoly& f) {
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < nprimes; ++i)
                if (table.classify(f, i) == want) ++c;
            const double D = static_cast<double>(c) - expected;
            s.sum_sq += D * D;
            if (std::abs(D) > rep.threshold) ++s.exceptional;
            if (rows) s.rows.push_back({f, c, D});
        },
        [](State& a, const State& b) {
            a.sum_sq += b.sum_sq;
            a.exceptional += b.exceptional;
            a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
        });
    rep.sum_sq = st.sum_sq;
    rep.exceptional = st.exceptional;
    rep.rows = std::move(st.rows);
    rep.normalization = std::pow(static_cast<double>(spec.N), spec.n * K.degree()) * static_cast<double>(rep.pi_K);
    rep.ratio = rep.normalization > 0 ? rep.sum_sq / rep.normalization : 0.0;
    return rep;
}

AvoidanceReport avoidance(const NumberField& K, const CensusSpec& spec, const std::vector<SplittingType>& R,
                          std::uint64_t x) {
    check_x(x);
    AvoidanceReport rep;
    rep.spec = spec;
    rep.R = R;
    rep.x = x;
    rep.population = population(K, spec);
    if (x < 2) {
        rep.E = rep.population;
        return rep;
    }
    ReductionTable table(K, spec.n, x);
    std::vector<bool> in_R(table.types().size(), false);
    for (const auto& r : R) in_R[type_index(table.types(), r)] = true;
    auto E = enumerate_parallel<std::uint64_t>(
        K, spec, [] { return std::uint64_t{0}; },
        [&](std::uint64_t& e, const OPoly& f) {
            for (std::size_t i = 0; i < table.size(); ++i) {
                int t = table.classify(f, i);
                if (t >= 0 && in_R[t]) return;
            }
            ++e;
        },
        [](std::uint64_t& a, std::uint64_t b) { a += b; });
    rep.E = E;
    return rep;
}

Rational selberg_sum(const NumberField& K, const Rational& gamma, std::uint64_t t, std::uint64_t x) {
    if (x > 1000000ULL) throw TooLarge("selberg_sum limited to x ≤ 10^6");
    std::vector<std::uint64_t> q;
    if (x >= 2)
        for (const auto& pn : prime_ideal_norms(K, x))
            if (pn.q >= t) q.push_back(pn.q);
    // counts[w] = number of admissible ideals with w prime factors.
    std::vector<std::uint64_t> counts(1, 0);
    auto dfs = [&](auto&& self, std::size_t start, std::uint64_t prod, std::size_t w) -> void {
        if (counts.size() <= w) counts.resize(w + 1, 0);
        ++counts[w];
        for (std::size_t i = start; i < q.size() && prod * q[i] <= x; ++i) self(self, i + 1, prod * q[i], w + 1);
    };
    dfs(dfs, 0, 1, 0);
    Rational s = 0, g = 1;
    for (std::size_t w = 0; w < counts.size(); ++w) {
        s += g * counts[w];
        g *= gamma;
    }
    return s;
}

namespace {

struct CharacterModulus {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> residue;  ///< residue class code of each box point
};

/// Residue class codes Σ_k v_k q^k of every point of the height-N box of O_K^n.
std::vector<CharacterModulus> moduli_for(const NumberField& K, int n, std::int64_t N, std::uint64_t x) {
    std::vector<CharacterModulus> out;
    CensusSpec spec{n, N, 1};
    for (const auto& P : prime_ideals_up_to(K, x)) {
        long double cells = std::pow(static_cast<long double>(P.q), 2 * n);
        if (cells > 1e8L) throw TooLarge("character table q^{2n} above 10^8");
        ResidueMap R(K, P);
        CharacterModulus m;
        m.q = P.q;
        m.p = static_cast<std::uint32_t>(P.p);
        enumerate(K, spec, [&](const OPoly& xi) {
            std::uint64_t code = 0;
            for (int k = n - 1; k >= 0; --k) code = code * P.q + R.reduce(xi.a[k]);
            m.residue.push_back(static_cast<std::uint32_t>(code));
        });
        out.push_back(std::move(m));
    }
    return out;
}

struct SieveSums {
    double proper = 0.0;
    double parseval_error = 0.0;
};

SieveSums character_sums(const NumberField& K, int n, const CharacterModulus& m,
                         const std::vector<std::complex<double>>& c) {
    const FqField F = FqField::of_size(m.q);
    std::uint64_t classes = 1;
    for (int k = 0; k < n; ++k) classes *= m.q;
    std::vector<std::complex<double>> W(classes);
    for (std::size_t i = 0; i < c.size(); ++i) W[m.residue[i]] += c[i];
    std::vector<std::complex<double>> roots(m.p);
    for (std::uint32_t j = 0; j < m.p; ++j)
        roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / m.p);
    std::vector<Fq> a(n), v(n);
    double total = 0.0, proper = 0.0;
    for (std::uint64_t ac = 0; ac < classes; ++ac) {
        std::uint64_t t = ac;
        for (int k = 0; k < n; ++k) {
            a[k] = static_cast<Fq>(t % m.q);
            t /= m.q;
        }
        std::complex<double> S = 0.0;
        for (std::uint64_t vc = 0; vc < classes; ++vc) {
            if (W[vc] == std::complex<double>{}) continue;
            std::uint64_t u = vc;
            Fq dot = 0;
            for (int k = 0; k < n; ++k) {
                v[k] = static_cast<Fq>(u % m.q);
                u /= m.q;
                dot = F.add(dot, F.mul(a[k], v[k]));
            }
            S += W[vc] * roots[F.trace(dot)];
        }
        const double s2 = std::norm(S);
        total += s2;
        if (ac != 0) proper += s2;
    }
    double w2 = 0.0;
    for (const auto& w : W) w2 += std::norm(w);
    const double expect = static_cast<double>(classes) * w2;
    SieveSums out;
    out.proper = proper;
    out.parseval_error = expect > 0 ? std::abs(total - expect) / expect : std::abs(total);
    (void)K;
    return out;
}

double ratio_for(const NumberField& K, int n, const std::vector<CharacterModulus>& mods, double scale,
                 const std::vector<std::complex<double>>& c, double* parseval_error) {
    double num = 0.0, perr = 0.0;
    for (const auto& m : mods) {
        auto s = character_sums(K, n, m, c);
        num += s.proper;
        perr = std::max(perr, s.parseval_error);
    }
    double c2 = 0.0;
    for (const auto& w : c) c2 += std::norm(w);
    if (parseval_error) *parseval_error = perr;
    return c2 > 0 ? num / (scale * c2) : 0.0;
}

double sieve_scale(const NumberField& K, int n, std::int64_t N, std::uint64_t x) {
    return std::pow(static_cast<double>(N), n * K.degree()) + std::pow(static_cast<double>(x), 2 * n);
}

void check_sieve_args(int n, std::uint64_t x) {
    if (n < 1) throw ConfigError("n must be at least 1");
    if (x > 64) throw TooLarge("large_sieve_check needs prime norms ≤ 64");
}

}  // namespace

double large_sieve_ratio(const NumberField& K, int n, std::int64_t N, std::uint64_t x,
                         const std::vector<std::complex<double>>& weights, double* parseval_error) {
    check_sieve_args(n, x);
    const std::uint64_t pts = population(K, CensusSpec{n, N, 1});
    if (weights.size() != pts) throw ConfigError("weight vector does not match the box size");
    auto mods = moduli_for(K, n, N, x);
    return ratio_for(K, n, mods, sieve_scale(K, n, N, x), weights, parseval_error);
}

LargeSieveReport large_sieve_check(const NumberField& K, int n, std::int64_t N, std::uint64_t x, int trials,
                                   std::uint64_t seed) {
    check_sieve_args(n, x);
    LargeSieveReport rep;
    rep.n = n;
    rep.N = N;
    rep.x = x;
    rep.trials = trials;
    rep.seed = seed;
    rep.points = population(K, CensusSpec{n, N, 1});
    if (rep.points > 10000000ULL) throw TooLarge("large_sieve_check limited to 10^7 box points");
    auto mods = moduli_for(K, n, N, x);
    for (const auto& m : mods) rep.moduli.push_back(m.q);
    rep.scale = sieve_scale(K, n, N, x);
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    std::vector<std::complex<double>> c(rep.points);
    for (int t = 0; t < trials; ++t) {
        for (auto& w : c) {
            const double re = unit();
            w = {re, unit()};
        }
        double perr = 0.0;
        double r = ratio_for(K, n, mods, rep.scale, c, &perr);
        rep.ratios.push_back(r);
        rep.max_ratio = std::max(rep.max_ratio, r);
        rep.parseval_error = std::max(rep.parseval_error, perr);
    }
    return rep;
}

}  // namespace vdw
