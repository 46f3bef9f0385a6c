#include "vdw/galois.hpp"

#include "vdw/densities.hpp"
#include "vdw/errors.hpp"
#include "vdw/resolvent.hpp"

namespace vdw {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::ProvenSn: return "ProvenSn";
        case Verdict::ProvenNotSn: return "ProvenNotSn";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

std::string symmetric_label(int n) {
    if (n == 2) return "C2";
    return "S" + std::to_string(n);
}

namespace {

std::optional<BigOElem> square_root_with(const NumberField& K, const FactorSearch& fs, const BigOElem& x) {
    if (x.is_zero()) return BigOElem{};
    if (K.degree() == 1) {
        if (x.c[0] < 0) return std::nullopt;
        BigInt r = isqrt(x.c[0]);
        if (r * r != x.c[0]) return std::nullopt;
        BigOElem out;
        out.c[0] = r;
        return out;
    }
    BigOPoly g;
    g.a = {K.neg(x), BigOElem{}};
    auto roots = fs.roots(g);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

BigOElem big(const NumberField& K, std::int64_t v) { return to_big(K.from_int(v)); }

std::string classify_with(const NumberField& K, const FactorSearch& fs, const BigOPoly& f) {
    const int n = f.degree();
    if (n < 2 || n > 4) throw ConfigError("exact classification covers degrees 2, 3 and 4");
    const BigOElem disc = poly_disc(K, f);
    if (disc.is_zero()) throw Reducible("polynomial has a repeated factor");
    if (fs.is_reducible(f)) throw Reducible("polynomial is reducible over K");
    if (n == 2) return "C2";
    const bool square_disc = square_root_with(K, fs, disc).has_value();
    if (n == 3) return square_disc ? "A3" : "S3";

    const BigOElem& a = f.a[3];
    const BigOElem& b = f.a[2];
    const BigOElem& c = f.a[1];
    const BigOElem& d = f.a[0];
    auto mul = [&](const BigOElem& x, const BigOElem& y) { return K.mul(x, y); };
    const BigOElem four = big(K, 4);
    // Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
    BigOPoly cubic;
    cubic.a = {K.neg(K.add(K.sub(mul(mul(a, a), d), mul(four, mul(b, d))), mul(c, c))),
               K.sub(mul(a, c), mul(four, d)), K.neg(b)};
    auto roots = fs.roots(cubic);
    if (roots.empty()) return square_disc ? "A4" : "S4";
    if (roots.size() == 3) return "V4";
    if (roots.size() != 1) throw Error("resolvent cubic has a repeated root despite nonzero discriminant");
    const BigOElem& r = roots[0];
    const BigOElem d1 = K.sub(mul(r, r), mul(four, d));
    const BigOElem d2 = K.sub(mul(a, a), mul(four, K.sub(b, r)));
    auto splits = [&](const BigOElem& delta) {
        return square_root_with(K, fs, delta).has_value() || square_root_with(K, fs, mul(delta, disc)).has_value();
    };
    return splits(d1) && splits(d2) ? "C4" : "D4";
}

std::uint32_t reach_mask(const SplittingType& t) {
    std::uint32_t reach = 1;
    for (int j = 1; j <= t.n(); ++j)
        for (int k = 0; k < t.at(j); ++k) reach |= reach << j;
    return reach;
}

Fq reduce_elem(const ResidueMap& R, const OElem& a) { return R.reduce(a); }
Fq reduce_elem(const ResidueMap& R, const BigOElem& a) { return R.reduce(a); }

BigOPoly as_big(const OPoly& f) { return to_big(f); }
const BigOPoly& as_big(const BigOPoly& f) { return f; }

}  // namespace

std::optional<BigOElem> square_root(const NumberField& K, const BigOElem& x) {
    return square_root_with(K, FactorSearch(K), x);
}

std::string classify_small(const NumberField& K, const BigOPoly& f) { return classify_with(K, FactorSearch(K), f); }

std::optional<std::string> galois_group_small(const NumberField& K, const FactorSearch& fs, const BigOPoly& f) {
    if (poly_disc(K, f).is_zero() || fs.is_reducible(f)) return std::nullopt;
    return classify_with(K, fs, f);
}

SnCertifier::SnCertifier(const NumberField& K, int n, std::uint64_t x_max, bool exact_fallback)
    : K_(K), n_(n), x_max_(x_max), fallback_(exact_fallback),
      table_(std::make_shared<const ReductionTable>(K, n, std::max<std::uint64_t>(x_max, 2))), search_(K) {
    if (n < 1) throw ConfigError("degree must be at least 1");
}

GaloisCertificate SnCertifier::certify(const OPoly& f) const { return run(f); }
GaloisCertificate SnCertifier::certify(const BigOPoly& f) const { return run(f); }

template <class Poly>
GaloisCertificate SnCertifier::run(const Poly& f) const {
    GaloisCertificate cert;
    const int n = f.degree();
    if (n != n_) throw ConfigError("certifier built for degree " + std::to_string(n_));
    if (n == 1) {
        cert.verdict = Verdict::ProvenSn;
        cert.reason = "degree one";
        cert.group = "S1";
        return cert;
    }
    const std::uint32_t proper = (1u << n) - 2;  // factor degrees 1..n-1
    std::uint32_t possible = proper;
    bool irreducible = false, have_T = false, have_P = false;
    const ReductionTable& table = *table_;
    FqPoly g(n + 1);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const ResidueMap& R = table.map(i);
        const PrimeIdeal& P = R.prime();
        if (P.q > x_max_) break;
        cert.x_reached = P.q;
        for (int k = 0; k < n; ++k) g[k] = reduce_elem(R, f.a[k]);
        g[n] = R.field().one();
        const int t = table.classify_reduced(g, i);
        if (t < 0) continue;
        const SplittingType& type = table.types()[t];
        if (!irreducible) {
            if (type.at(n) == 1) {
                irreducible = true;
                cert.witnesses.push_back({P.p, P.q, type, "irreducible"});
            } else {
                const std::uint32_t next = possible & reach_mask(type);
                if (next != possible) {
                    possible = next;
                    cert.witnesses.push_back({P.p, P.q, type, "degree-pattern"});
                    if ((possible & proper) == 0) irreducible = true;
                }
            }
        }
        if (!have_T && in_T(type)) {
            have_T = true;
            cert.witnesses.push_back({P.p, P.q, type, "T"});
        }
        if (!have_P && in_P(type)) {
            have_P = true;
            cert.witnesses.push_back({P.p, P.q, type, "P"});
        }
        if (irreducible && have_T && have_P) {
            cert.verdict = Verdict::ProvenSn;
            cert.reason = "irreducible, with a transposition and a prime cycle of length > n/2";
            cert.group = symmetric_label(n);
            return cert;
        }
    }

    const BigOPoly F = as_big(f);
    if (!irreducible) {
        if (poly_disc(K_, F).is_zero()) {
            cert.verdict = Verdict::ProvenNotSn;
            cert.reason = "reducible: repeated factor";
            cert.group = "reducible";
            return cert;
        }
        for (int k = 1; 2 * k <= n; ++k) {
            if (auto h = search_.find_factor(F, k)) {
                cert.verdict = Verdict::ProvenNotSn;
                cert.reason = "reducible: factor " + to_string(K_, *h);
                cert.group = "reducible";
                return cert;
            }
        }
    }
    if (n <= 4 && fallback_) {
        cert.group = classify_with(K_, search_, F);
        if (cert.group == symmetric_label(n)) {
            cert.verdict = Verdict::ProvenSn;
            cert.reason = "exact classification";
        } else {
            cert.verdict = Verdict::ProvenNotSn;
            cert.reason = "Galois group " + cert.group;
        }
        return cert;
    }
    if (square_root_with(K_, search_, poly_disc(K_, F))) {
        cert.verdict = Verdict::ProvenNotSn;
        cert.reason = "square discriminant: group inside A_n";
        cert.group = "inside A" + std::to_string(n);
        return cert;
    }
    cert.verdict = Verdict::Undecided;
    cert.reason = "no certificate up to q = " + std::to_string(cert.x_reached);
    return cert;
}

template GaloisCertificate SnCertifier::run<OPoly>(const OPoly&) const;
template GaloisCertificate SnCertifier::run<BigOPoly>(const BigOPoly&) const;

GaloisCertificate certify_sn(const NumberField& K, const BigOPoly& f, std::uint64_t x_max, bool exact_fallback) {
    return SnCertifier(K, f.degree(), x_max, exact_fallback).certify(f);
}

NonSnCensus non_sn_census(const NumberField& K, const CensusSpec& spec, std::uint64_t x_max) {
    NonSnCensus out;
    out.spec = spec;
    out.x_max = x_max;
    out.total = population(K, spec);
    SnCertifier cert(K, spec.n, x_max, true);
    struct State {
        std::uint64_t sn = 0, undecided = 0, non_sn = 0;
        std::map<std::string, std::uint64_t> groups;
    };
    auto st = enumerate_parallel<State>(
        K, spec, [] { return State{}; },
        [&](State& s, const OPoly& f) {
            auto c = cert.certify(f);
            switch (c.verdict) {
                case Verdict::ProvenSn: ++s.sn; break;
                case Verdict::Undecided: ++s.undecided; break;
                case Verdict::ProvenNotSn:
                    ++s.non_sn;
                    ++s.groups[c.group];
                    break;
            }
        },
        [](State& a, const State& b) {
            a.sn += b.sn;
            a.undecided += b.undecided;
            a.non_sn += b.non_sn;
            for (const auto& [g, c] : b.groups) a.groups[g] += c;
        });
    out.proven_sn = st.sn;
    out.undecided = st.undecided;
    out.non_sn = st.non_sn;
    out.by_group = std::move(st.groups);
    return out;
}

}  // namespace vdw
