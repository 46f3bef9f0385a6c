#include "vdw/primes.hpp"

#include <algorithm>
#include <cmath>

#include "vdw/errors.hpp"

namespace vdw {

namespace {

FqPoly defining_mod_p(const NumberField& K, const FqField& F) {
    FqPoly g;
    for (auto c : K.defining_poly()) g.push_back(F.from_int(c));
    ftrim(g);
    return g;
}

bool divides_disc(const NumberField& K, std::uint64_t p) { return K.disc() % BigInt(p) == 0; }

}  // namespace

std::vector<PrimeIdeal> primes_above(const NumberField& K, std::uint64_t p) {
    if (p < 2 || p > 0xffffffffULL) throw ConfigError("prime out of range: " + std::to_string(p));
    const FqField F = FqField::prime(static_cast<std::uint32_t>(p));
    const bool ram_p = divides_disc(K, p);
    std::vector<PrimeIdeal> out;
    for (auto& [g, mult] : factor(F, defining_mod_p(K, F))) {
        PrimeIdeal P;
        P.p = p;
        P.local_factor.assign(g.begin(), g.end());
        P.f = fdeg(g);
        P.e = mult;
        P.q = 1;
        for (int i = 0; i < P.f; ++i) P.q *= p;
        P.unramified = mult == 1 && !ram_p;
        out.push_back(std::move(P));
    }
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    return out;
}

std::vector<PrimeNorm> prime_ideal_norms(const NumberField& K, std::uint64_t x) {
    std::vector<PrimeNorm> out;
    const int d = K.degree();
    for (std::uint64_t p : primes_up_to(x)) {
        if (d == 1) {
            out.push_back({p, true});
            continue;
        }
        if (divides_disc(K, p)) {
            for (const auto& P : primes_above(K, p))
                if (P.q <= x) out.push_back({P.q, P.unramified});
            continue;
        }
        const FqField F = FqField::prime(static_cast<std::uint32_t>(p));
        FqPoly g = defining_mod_p(K, F);
        if (p * p > x) {
            // Only degree-one primes can have norm ≤ x.
            FqPoly h = fpowmod(F, FqPoly{0, 1}, p, g);
            int roots = fdeg(fgcd(F, g, fsub(F, h, FqPoly{0, 1})));
            for (int i = 0; i < roots; ++i) out.push_back({p, true});
            continue;
        }
        auto counts = distinct_degree_counts(F, g);
        std::uint64_t q = 1;
        for (int f = 1; f <= d; ++f) {
            q *= p;
            if (q > x) break;
            for (int i = 0; i < counts[f - 1]; ++i) out.push_back({q, true});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PrimeNorm& a, const PrimeNorm& b) { return a.q < b.q; });
    return out;
}

std::vector<PrimeIdeal> prime_ideals_up_to(const NumberField& K, std::uint64_t x) {
    std::vector<PrimeIdeal> out;
    for (std::uint64_t p : primes_up_to(x))
        for (auto& P : primes_above(K, p))
            if (P.q <= x) out.push_back(std::move(P));
    std::stable_sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.q < b.q; });
    return out;
}

std::uint64_t pi_K(const NumberField& K, std::uint64_t x) {
    if (x < 2) return 0;
    return prime_ideal_norms(K, x).size();
}

ResidueMap::ResidueMap(const NumberField& K, const PrimeIdeal& P) : P_(P), d_(K.degree()) {
    F_ = std::make_shared<const FqField>(FqField::extension(static_cast<std::uint32_t>(P.p), P.f));
    const FqField& F = *F_;
    Fq theta = 0;
    if (d_ == 1) {
        theta = F.from_int(-K.defining_poly()[0]);
    } else if (P.f == 1) {
        theta = F.neg(P.local_factor[0]);
    } else {
        FqPoly lf;
        for (auto c : P.local_factor) lf.push_back(F.from_int(c));
        bool found = false;
        for (Fq t = 1; t < F.q(); ++t) {
            if (feval(F, lf, t) == 0) {
                theta = t;
                found = true;
                break;
            }
        }
        if (!found) throw Error("local factor has no root in the residue field");
    }
    theta1_ = theta;
    theta_pows_.assign(d_, F.one());
    for (int i = 1; i < d_; ++i) theta_pows_[i] = F.mul(theta_pows_[i - 1], theta);
}

Fq ResidueMap::reduce(const OElem& a) const {
    const FqField& F = *F_;
    Fq acc = 0;
    for (int i = 0; i < d_; ++i)
        if (a.c[i] != 0) acc = F.add(acc, F.mul(F.from_int(a.c[i]), theta_pows_[i]));
    return acc;
}

Fq ResidueMap::reduce(const BigOElem& a) const {
    const FqField& F = *F_;
    const BigInt p(F.p());
    Fq acc = 0;
    for (int i = 0; i < d_; ++i) {
        BigInt r = a.c[i] % p;
        if (r < 0) r += p;
        if (r != 0) acc = F.add(acc, F.mul(F.from_int(to_i64(r)), theta_pows_[i]));
    }
    return acc;
}

FqPoly ResidueMap::reduce_poly(const OPoly& f) const {
    const int n = f.degree();
    FqPoly g(n + 1);
    for (int k = 0; k < n; ++k) g[k] = reduce(f.a[k]);
    g[n] = F_->one();
    return g;
}

FqPoly reduce_poly(const NumberField& K, const OPoly& f, const PrimeIdeal& P) { return ResidueMap(K, P).reduce_poly(f); }

ReductionTable::ReductionTable(const NumberField& K, int n, std::uint64_t x) : n_(n), x_(x) {
    types_ = all_splitting_types(n);
    for (const auto& P : prime_ideals_up_to(K, x)) {
        if (!P.unramified) continue;
        if (P.f > 1 && P.q > FqField::kMaxExtensionSize)
            throw TooLarge("residue field of size " + std::to_string(P.q) + " is beyond the extension-field limit");
        maps_.emplace_back(K, P);
    }
    lookup_.resize(maps_.size());
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const FqField& F = maps_[i].field();
        long double total = std::pow(static_cast<long double>(F.q()), n);
        if (total > kLookupLimit) continue;
        auto& table = lookup_[i];
        table.assign(static_cast<std::size_t>(total), -1);
        FqPoly g(n + 1, 0);
        g[n] = F.one();
        for (std::size_t code = 0; code < table.size(); ++code) {
            std::size_t c = code;
            for (int k = 0; k < n; ++k) {
                g[k] = static_cast<Fq>(c % F.q());
                c /= F.q();
            }
            auto t = classify_reduction(F, g);
            if (t) table[code] = static_cast<std::int16_t>(std::lower_bound(types_.begin(), types_.end(), *t) - types_.begin());
        }
    }
}

int ReductionTable::classify_reduced(const FqPoly& g, std::size_t i) const {
    const auto& table = lookup_[i];
    if (!table.empty()) {
        const std::uint64_t q = maps_[i].field().q();
        std::size_t code = 0;
        for (int k = n_ - 1; k >= 0; --k) code = code * q + g[k];
        return table[code];
    }
    auto t = classify_reduction(maps_[i].field(), g);
    if (!t) return -1;
    return static_cast<int>(std::lower_bound(types_.begin(), types_.end(), *t) - types_.begin());
}

int ReductionTable::classify(const OPoly& f, std::size_t i) const { return classify_reduced(maps_[i].reduce_poly(f), i); }

std::uint64_t IdealCounter::cumulative(std::uint64_t m) const {
    std::uint64_t s = 0;
    for (std::uint64_t k = 1; k <= std::min(m, x); ++k) s += a[k];
    return s;
}

IdealCounter ideal_counts(const NumberField& K, std::uint64_t x) {
    if (x > 10000000ULL) throw TooLarge("ideal_counts limited to x ≤ 10^7");
    IdealCounter ic;
    ic.x = x;
    ic.a.assign(x + 1, 0);
    if (x >= 1) ic.a[1] = 1;
    for (const auto& pn : prime_ideal_norms(K, x)) {
        const std::uint64_t q = pn.q;
        for (std::uint64_t m = 1; m * q <= x; ++m)
            if (ic.a[m]) ic.a[m * q] += ic.a[m];
    }
    return ic;
}

}  // namespace vdw
