#include "vdw/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include "vdw/hp.hpp"

namespace vdw {

std::uint64_t population(const NumberField& K, const CensusSpec& spec) {
    if (spec.n < 1) throw ConfigError("polynomial degree n must be at least 1");
    if (spec.N < 0) throw ConfigError("height bound N must be non-negative");
    const long double side = 2.0L * spec.N + 1.0L;
    const long double total = std::pow(side, static_cast<long double>(spec.n) * K.degree());
    if (total > static_cast<long double>(kVisitGuard))
        throw TooLarge("population (2N+1)^(nd) ~ " + std::to_string(static_cast<double>(total)) +
                       " exceeds the 10^9 visit guard");
    return static_cast<std::uint64_t>(std::llround(total));
}

PolyIndexer::PolyIndexer(int n, int d, std::int64_t N) : n_(n), d_(d), N_(N), base_(2 * N + 1), size_(1) {
    for (int i = 0; i < n * d; ++i) size_ *= base_;
}

std::uint64_t PolyIndexer::index(const OPoly& f) const {
    std::uint64_t idx = 0;
    for (int pos = n_ * d_ - 1; pos >= 0; --pos) idx = idx * base_ + static_cast<std::uint64_t>(f.a[pos / d_].c[pos % d_] + N_);
    return idx;
}

OPoly PolyIndexer::poly(std::uint64_t idx) const {
    OPoly f;
    f.a.assign(n_, OElem{});
    for (int pos = 0; pos < n_ * d_; ++pos) {
        f.a[pos / d_].c[pos % d_] = static_cast<std::int64_t>(idx % base_) - N_;
        idx /= base_;
    }
    return f;
}

void enumerate_slab(const NumberField& K, const CensusSpec& spec, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const OPoly&)>& visit) {
    population(K, spec);
    const int d = K.degree();
    const int len = spec.n * d;
    const std::int64_t N = spec.N;
    if (lo > hi) return;
    OPoly f;
    f.a.assign(spec.n, OElem{});
    std::vector<std::int64_t> c(len, -N);
    c[len - 1] = lo;
    for (int pos = 0; pos < len; ++pos) f.a[pos / d].c[pos % d] = c[pos];
    while (true) {
        visit(f);
        int pos = 0;
        while (pos < len) {
            const std::int64_t top = pos == len - 1 ? hi : N;
            if (c[pos] < top) break;
            c[pos] = pos == len - 1 ? lo : -N;
            f.a[pos / d].c[pos % d] = c[pos];
            ++pos;
        }
        if (pos == len) return;
        ++c[pos];
        f.a[pos / d].c[pos % d] = c[pos];
    }
}

void enumerate(const NumberField& K, const CensusSpec& spec, const std::function<void(const OPoly&)>& visit) {
    enumerate_slab(K, spec, -spec.N, spec.N, visit);
}

std::uint64_t Bitset::count() const {
    std::uint64_t s = 0;
    for (auto w : words_) s += static_cast<std::uint64_t>(std::popcount(w));
    return s;
}

// ---------------------------------------------------------------------------
// Factor search

namespace {

constexpr int kMaxPrefilterPrimes = 8;
constexpr std::uint64_t kPrefilterNorm = 64;

struct PrecisionData {
    std::vector<hp::Complex> thetas;
    std::vector<std::vector<hp::Complex>> vinv;
};

std::mutex g_precision_mutex;
// Keyed by the defining polynomial: field objects are not stable identities.
std::map<std::pair<std::vector<std::int64_t>, hp::Bits>, std::shared_ptr<PrecisionData>> g_precision_cache;

std::shared_ptr<PrecisionData> precision_data(const NumberField& K, hp::Bits bits) {
    std::lock_guard<std::mutex> lock(g_precision_mutex);
    auto key = std::make_pair(K.defining_poly(), bits);
    auto it = g_precision_cache.find(key);
    if (it != g_precision_cache.end()) return it->second;
    auto pd = std::make_shared<PrecisionData>();
    hp::Bits b = std::max<hp::Bits>(bits, 64);
    pd->thetas = K.theta_embeddings(b);
    pd->vinv = K.vinv(pd->thetas);
    g_precision_cache[key] = pd;
    return pd;
}

BigInt max_abs_coord(const BigOPoly& f) {
    BigInt m = 1;
    for (const auto& a : f.a)
        for (const auto& c : a.c)
            if (abs(c) > m) m = abs(c);
    return m;
}

BigOPoly shift_up(const BigOPoly& h, int j) {
    BigOPoly r;
    r.a.assign(j, BigOElem{});
    r.a.insert(r.a.end(), h.a.begin(), h.a.end());
    return r;
}

/// Roots of σ_i(f) in every embedding with a rigorous-looking error scale.
struct EmbeddedRoots {
    std::vector<std::vector<hp::Complex>> roots;  // per embedding
    std::vector<double> err;                      // max root error estimate per embedding
    std::vector<double> radius;                   // max |root| per embedding
    bool ok = true;
};

EmbeddedRoots embedded_roots(const NumberField& K, const BigOPoly& f, const PrecisionData& pd, hp::Bits bits) {
    const int n = f.degree();
    const int d = K.degree();
    EmbeddedRoots er;
    er.roots.resize(d);
    er.err.assign(d, 0.0);
    er.radius.assign(d, 0.0);
    for (int i = 0; i < d; ++i) {
        std::vector<hp::Complex> coeffs;
        coeffs.reserve(n);
        for (int k = 0; k < n; ++k) coeffs.push_back(K.embed(f.a[k], i, pd.thetas));
        auto rs = hp::roots(coeffs);
        const double ulp = std::ldexp(1.0, -static_cast<int>(bits) + 4);
        for (auto& r : rs) {
            hp::Complex p{hp::Real(1L, bits), hp::Real(bits)};
            hp::Complex dp(bits);
            for (int k = n - 1; k >= 0; --k) {
                dp = dp * r + p;
                p = p * r + coeffs[k];
            }
            double mag = hp::abs(r).to_double();
            double dpm = hp::abs(dp).to_double();
            double pm = hp::abs(p).to_double();
            double e;
            if (dpm == 0.0) e = pm == 0.0 ? ulp * (1.0 + mag) : INFINITY;
            else e = n * pm / dpm + ulp * (1.0 + mag);
            er.err[i] = std::max(er.err[i], e);
            er.radius[i] = std::max(er.radius[i], mag);
        }
        er.roots[i] = std::move(rs);
        if (!std::isfinite(er.err[i])) er.ok = false;
    }
    return er;
}

/// Coefficients (low to high, without the leading one) of Π_{s∈S}(X - r_s).
std::vector<hp::Complex> subset_product(const std::vector<hp::Complex>& rs, const std::vector<int>& idx, hp::Bits bits) {
    std::vector<hp::Complex> prod{hp::Complex{hp::Real(1L, bits), hp::Real(bits)}};
    for (int i : idx) {
        std::vector<hp::Complex> next(prod.size() + 1, hp::Complex(bits));
        for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] += prod[j];
            next[j] -= prod[j] * rs[i];
        }
        prod = std::move(next);
    }
    prod.pop_back();
    return prod;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return {{}};
    while (true) {
        out.push_back(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

double vinv_row_max(const PrecisionData& pd, int d) {
    double m = 0.0;
    for (int r = 0; r < d; ++r) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += hp::abs(pd.vinv[r][i]).to_double();
        m = std::max(m, s);
    }
    return m;
}

/// Rounds Σ_i vinv[m][i]·vals[i] to an integer coordinate vector; nullopt if
/// some coordinate is not within 1/4 of an integer.
std::optional<BigOElem> round_coords(const PrecisionData& pd, const std::vector<const hp::Complex*>& vals, int d,
                                     hp::Bits bits) {
    BigOElem out;
    hp::Real quarter(0.25, bits);
    for (int m = 0; m < d; ++m) {
        hp::Complex s(bits);
        for (int i = 0; i < d; ++i) s += pd.vinv[m][i] * *vals[i];
        if (hp::abs(s.im) > quarter) return std::nullopt;
        BigInt r = s.re.round();
        if (hp::abs(s.re - hp::Real(r, bits)) > quarter) return std::nullopt;
        out.c[m] = r;
    }
    return out;
}

constexpr hp::Bits kStartBits = 64;
constexpr hp::Bits kMaxBits = 4096;

}  // namespace

FactorSearch::FactorSearch(const NumberField& K) : K_(K) {
    for (const auto& P : prime_ideals_up_to(K, kPrefilterNorm)) {
        if (!P.unramified || P.f != 1) continue;
        filter_.emplace_back(K, P);
        if (static_cast<int>(filter_.size()) >= kMaxPrefilterPrimes) break;
    }
}

bool FactorSearch::degree_possible(const BigOPoly& f, int k) const {
    const int n = f.degree();
    for (const auto& R : filter_) {
        const FqField& F = R.field();
        FqPoly g(n + 1);
        for (int j = 0; j < n; ++j) g[j] = R.reduce(f.a[j]);
        g[n] = F.one();
        if (!fis_squarefree(F, g)) continue;
        auto counts = distinct_degree_counts(F, g);
        std::uint64_t reach = 1;  // bit s set when degree s is a sum of factor degrees
        for (int j = 1; j <= n; ++j)
            for (int c = 0; c < counts[j - 1]; ++c) reach |= reach << j;
        if (!((reach >> k) & 1u)) return false;
    }
    return true;
}

std::optional<BigOPoly> FactorSearch::numeric_search(const BigOPoly& f, int k, bool, bool*) const {
    const int n = f.degree();
    const int d = K_.degree();
    const auto subs = subsets(n, k);
    long double combos = std::pow(static_cast<long double>(subs.size()), d);
    if (combos > 5e6L) throw TooLarge("factor search over " + std::to_string(static_cast<double>(combos)) + " root subsets");

    const int mag_bits = static_cast<int>(max_abs_coord(f).str().size() * 3.33) + 8;
    for (hp::Bits bits = std::max<hp::Bits>(kStartBits, 2 * mag_bits); bits <= kMaxBits; bits *= 2) {
        auto pd = precision_data(K_, bits);
        auto er = embedded_roots(K_, f, *pd, bits);
        if (!er.ok) continue;
        // Error of subset-product coefficients, then of coordinates.
        double cerr = 0.0;
        for (int i = 0; i < d; ++i) cerr = std::max(cerr, k * er.err[i] * std::pow(1.0 + er.radius[i], k - 1));
        cerr *= vinv_row_max(*pd, d);
        if (!(cerr < 0.05)) continue;

        std::vector<std::vector<std::vector<hp::Complex>>> prods(d);
        for (int i = 0; i < d; ++i)
            for (const auto& s : subs) prods[i].push_back(subset_product(er.roots[i], s, bits));

        std::vector<std::size_t> choice(d, 0);
        std::vector<const hp::Complex*> vals(d);
        while (true) {
            BigOPoly h;
            h.a.resize(k);
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                for (int i = 0; i < d; ++i) vals[i] = &prods[i][choice[i]][j];
                auto c = round_coords(*pd, vals, d, bits);
                if (!c) ok = false;
                else h.a[j] = *c;
            }
            if (ok && divide_exact(K_, f, h)) return h;
            int pos = 0;
            while (pos < d && choice[pos] + 1 == subs.size()) {
                choice[pos] = 0;
                ++pos;
            }
            if (pos == d) break;
            ++choice[pos];
        }
        return std::nullopt;
    }
    throw PrecisionExhausted("factor search could not separate roots at " + std::to_string(kMaxBits) + " bits");
}

std::optional<BigOPoly> FactorSearch::search_nonzero_constant(const BigOPoly& f, int k) const {
    const int n = f.degree();
    if (2 * k > n) {
        auto h = search_nonzero_constant(f, n - k);
        if (!h) return std::nullopt;
        return divide_exact(K_, f, *h);
    }
    if (!degree_possible(f, k)) return std::nullopt;
    if (K_.degree() == 1 && k == 1) {
        const BigInt a0 = abs(f.a[0].c[0]);
        if (a0 <= BigInt(100000000000000LL)) {
            const std::int64_t v = to_i64(a0);
            auto test = [&](std::int64_t r) -> std::optional<BigOPoly> {
                for (std::int64_t s : {r, -r}) {
                    BigInt acc = 1;
                    for (int j = n - 1; j >= 0; --j) acc = acc * s + f.a[j].c[0];
                    if (acc == 0) {
                        BigOPoly h;
                        h.a.resize(1);
                        h.a[0].c[0] = -s;
                        return h;
                    }
                }
                return std::nullopt;
            };
            for (std::int64_t q = 1; q * q <= v; ++q) {
                if (v % q) continue;
                if (auto h = test(q)) return h;
                if (auto h = test(v / q)) return h;
            }
            return std::nullopt;
        }
    }
    return numeric_search(f, k, false, nullptr);
}

std::optional<BigOPoly> FactorSearch::find_factor(const BigOPoly& f, int k) const {
    const int n = f.degree();
    if (k < 0 || k > n) throw ConfigError("factor degree out of range");
    if (k == 0) return BigOPoly{};
    if (k == n) return f;
    int m = 0;
    while (m < n && f.a[m].is_zero()) ++m;
    if (m == 0) return search_nonzero_constant(f, k);
    BigOPoly g;
    g.a.assign(f.a.begin() + m, f.a.end());
    const int dg = n - m;
    for (int j = std::min(m, k); j >= 0; --j) {
        const int t = k - j;
        if (t > dg) continue;
        if (t == 0) return shift_up(BigOPoly{}, j);
        if (t == dg) return shift_up(g, j);
        if (auto h = search_nonzero_constant(g, t)) return shift_up(*h, j);
    }
    return std::nullopt;
}

bool FactorSearch::has_factor_of_degree(const OPoly& f, int k) const { return find_factor(to_big(f), k).has_value(); }

bool FactorSearch::is_reducible(const BigOPoly& f) const {
    for (int k = 1; 2 * k <= f.degree(); ++k)
        if (find_factor(f, k)) return true;
    return false;
}

bool FactorSearch::is_reducible(const OPoly& f) const { return is_reducible(to_big(f)); }

std::vector<BigOElem> FactorSearch::roots(const BigOPoly& f) const {
    const int n = f.degree();
    const int d = K_.degree();
    std::set<BigOElem> found;
    if (n == 0) return {};
    const int mag_bits = static_cast<int>(max_abs_coord(f).str().size() * 3.33) + 8;
    for (hp::Bits bits = std::max<hp::Bits>(kStartBits, 2 * mag_bits); bits <= kMaxBits; bits *= 2) {
        auto pd = precision_data(K_, bits);
        auto er = embedded_roots(K_, f, *pd, bits);
        if (!er.ok) continue;
        double cerr = 0.0;
        for (int i = 0; i < d; ++i) cerr = std::max(cerr, er.err[i]);
        cerr *= vinv_row_max(*pd, d);
        if (!(cerr < 0.05)) continue;
        std::vector<std::size_t> choice(d, 0);
        std::vector<const hp::Complex*> vals(d);
        while (true) {
            for (int i = 0; i < d; ++i) vals[i] = &er.roots[i][choice[i]];
            auto c = round_coords(*pd, vals, d, bits);
            if (c && evaluate(K_, f, *c).is_zero()) found.insert(*c);
            int pos = 0;
            while (pos < d && choice[pos] + 1 == static_cast<std::size_t>(n)) {
                choice[pos] = 0;
                ++pos;
            }
            if (pos == d) break;
            ++choice[pos];
        }
        return {found.begin(), found.end()};
    }
    throw PrecisionExhausted("root search could not separate roots at " + std::to_string(kMaxBits) + " bits");
}

bool has_factor_of_degree(const NumberField& K, const OPoly& f, int k) {
    return FactorSearch(K).has_factor_of_degree(f, k);
}

std::vector<BigOElem> roots_in_ok(const NumberField& K, const BigOPoly& f) { return FactorSearch(K).roots(f); }

// ---------------------------------------------------------------------------
// Quotient scan

namespace {

/// Enumerates the monic quotients g with (X + ν)·g of height ≤ N and reports
/// each product.
class QuotientWalker {
public:
    QuotientWalker(const NumberField& K, int n, std::int64_t N, const OElem& nu) : K_(K), n_(n), d_(K.degree()), N_(N), nu_(nu) {
        if (d_ > 1 && !nu.is_zero()) {
            auto m = K.mul_matrix(to_big(nu));
            // Double-precision inverse of M_ν for the preimage bounding box.
            std::vector<std::vector<double>> a(d_, std::vector<double>(2 * d_, 0.0));
            for (int i = 0; i < d_; ++i) {
                for (int j = 0; j < d_; ++j) a[i][j] = m[i][j].convert_to<double>();
                a[i][d_ + i] = 1.0;
            }
            for (int col = 0; col < d_; ++col) {
                int piv = col;
                for (int r = col + 1; r < d_; ++r)
                    if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
                std::swap(a[col], a[piv]);
                double p = a[col][col];
                for (auto& v : a[col]) v /= p;
                for (int r = 0; r < d_; ++r) {
                    if (r == col) continue;
                    double fct = a[r][col];
                    for (int j = 0; j < 2 * d_; ++j) a[r][j] -= fct * a[col][j];
                }
            }
            minv_.assign(d_, std::vector<double>(d_));
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) minv_[i][j] = a[i][d_ + j];
        }
    }

    template <class Emit>
    void run(Emit&& emit) {
        f_.a.assign(n_, OElem{});
        if (n_ == 1) {
            if (height(nu_) <= N_) {
                f_.a[0] = nu_;
                emit(f_);
            }
            return;
        }
        if (nu_.is_zero()) throw Error("QuotientWalker needs ν ≠ 0");
        level(0, OElem{}, emit);
    }

private:
    bool in_box(const OElem& a) const {
        for (int i = 0; i < d_; ++i)
            if (a.c[i] > N_ || a.c[i] < -N_) return false;
        return true;
    }

    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    /// Calls fn(q) for every q with prev + ν q of height ≤ N.
    template <class Fn>
    void preimages(const OElem& prev, Fn&& fn) {
        if (d_ == 1) {
            const std::int64_t v = nu_.c[0];
            std::int64_t lo, hi;
            if (v > 0) {
                lo = -floor_div(N_ + prev.c[0], v);
                hi = floor_div(N_ - prev.c[0], v);
            } else {
                lo = -floor_div(N_ - prev.c[0], -v);
                hi = floor_div(N_ + prev.c[0], -v);
            }
            OElem q;
            for (std::int64_t t = lo; t <= hi; ++t) {
                q.c[0] = t;
                fn(q);
            }
            return;
        }
        std::vector<std::int64_t> lo(d_), hi(d_);
        for (int j = 0; j < d_; ++j) {
            double center = 0.0, rad = 0.0;
            for (int i = 0; i < d_; ++i) {
                center -= minv_[j][i] * static_cast<double>(prev.c[i]);
                rad += std::abs(minv_[j][i]) * static_cast<double>(N_);
            }
            rad = rad * (1.0 + 1e-12) + 1e-9;
            lo[j] = static_cast<std::int64_t>(std::ceil(center - rad));
            hi[j] = static_cast<std::int64_t>(std::floor(center + rad));
            if (lo[j] > hi[j]) return;
        }
        OElem q;
        for (int j = 0; j < d_; ++j) q.c[j] = lo[j];
        while (true) {
            OElem img = K_.add(prev, K_.mul(nu_, q));
            if (in_box(img)) fn(q);
            int pos = 0;
            while (pos < d_ && q.c[pos] == hi[pos]) {
                q.c[pos] = lo[pos];
                ++pos;
            }
            if (pos == d_) break;
            ++q.c[pos];
        }
    }

    template <class Emit>
    void level(int j, const OElem& prev, Emit& emit) {
        preimages(prev, [&](const OElem& q) {
            f_.a[j] = K_.add(prev, K_.mul(nu_, q));
            if (j == n_ - 2) {
                OElem top = K_.add(q, nu_);
                if (in_box(top)) {
                    f_.a[n_ - 1] = top;
                    emit(f_);
                }
            } else {
                level(j + 1, q, emit);
            }
        });
    }

    const NumberField& K_;
    int n_, d_;
    std::int64_t N_;
    OElem nu_;
    std::vector<std::vector<double>> minv_;
    OPoly f_;
};

std::vector<double> root_radius(const NumberField& K, std::int64_t N) {
    std::vector<double> r(K.degree());
    for (int i = 0; i < K.degree(); ++i) r[i] = 1.0 + K.coord_bound(i) * static_cast<double>(N);
    return r;
}

template <class Fn>
void for_each_in_box(int d, const std::vector<std::int64_t>& box, Fn&& fn) {
    OElem nu;
    for (int i = 0; i < d; ++i) nu.c[i] = -box[i];
    while (true) {
        fn(nu);
        int pos = 0;
        while (pos < d && nu.c[pos] == box[pos]) {
            nu.c[pos] = -box[pos];
            ++pos;
        }
        if (pos == d) break;
        ++nu.c[pos];
    }
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

LinearFactorScan scan_linear_factors(const NumberField& K, const CensusSpec& spec, bool keep_bitset) {
    LinearFactorScan out;
    out.total = population(K, spec);
    const int d = K.degree();
    const int n = spec.n;
    const std::int64_t N = spec.N;
    PolyIndexer indexer(n, d, N);
    Bitset twice;
    if (keep_bitset) {
        out.hits = Bitset(indexer.size());
        twice = Bitset(indexer.size());
    }
    auto mark = [&](const OPoly& f) {
        if (!keep_bitset) return;
        std::uint64_t idx = indexer.index(f);
        if (out.hits.test_and_set(idx) && !twice.test_and_set(idx)) ++out.multi;
    };

    out.root_radius = root_radius(K, N);
    auto box = K.coordinate_box(out.root_radius);
    for_each_in_box(d, box, [&](const OElem& nu) {
        std::uint64_t t = 0;
        if (nu.is_zero()) {
            if (n == 1) {
                t = 1;
                if (keep_bitset) {
                    OPoly f;
                    f.a.assign(1, OElem{});
                    mark(f);
                }
            } else {
                // X divides f exactly when α_0 = 0.
                const std::uint64_t B = 2 * N + 1;
                const std::uint64_t rest = ipow(B, d * (n - 1));
                std::uint64_t offset = 0;
                for (int i = d - 1; i >= 0; --i) offset = offset * B + static_cast<std::uint64_t>(N);
                const std::uint64_t stride = ipow(B, d);
                t = rest;
                if (keep_bitset) {
                    for (std::uint64_t r = 0; r < rest; ++r) {
                        std::uint64_t idx = offset + stride * r;
                        if (out.hits.test_and_set(idx) && !twice.test_and_set(idx)) ++out.multi;
                    }
                }
            }
        } else {
            QuotientWalker walker(K, n, N, nu);
            walker.run([&](const OPoly& f) {
                ++t;
                mark(f);
            });
        }
        if (t > 0) {
            out.T[nu] = t;
            out.sum_T += t;
        }
    });
    if (keep_bitset) out.rho1 = out.hits.count();
    return out;
}

std::uint64_t T_count(const NumberField& K, const CensusSpec& spec, const OElem& nu) {
    population(K, spec);
    if (nu.is_zero()) {
        if (spec.n == 1) return 1;
        return ipow(2 * spec.N + 1, K.degree() * (spec.n - 1));
    }
    std::uint64_t t = 0;
    QuotientWalker walker(K, spec.n, spec.N, nu);
    walker.run([&](const OPoly&) { ++t; });
    return t;
}

std::uint64_t T_units(const NumberField& K, const CensusSpec& spec) {
    auto box = K.coordinate_box(root_radius(K, spec.N));
    std::uint64_t s = 0;
    for_each_in_box(K.degree(), box, [&](const OElem& nu) {
        if (nu.is_zero()) return;
        if (abs(K.norm(nu)) != 1) return;
        s += T_count(K, spec, nu);
    });
    return s;
}

BigInt L_count(const CensusSpec& spec, const std::vector<std::int64_t>& h) {
    const int n = spec.n;
    const std::int64_t N = spec.N;
    // coeff[s] = #{n-tuples in [-N, N]^n with sum s - nN}.
    std::vector<BigInt> coeff{1};
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(coeff.size() + 2 * N);
        BigInt window = 0;
        for (std::size_t s = 0; s < next.size(); ++s) {
            if (s < coeff.size()) window += coeff[s];
            if (s >= static_cast<std::size_t>(2 * N + 1)) window -= coeff[s - 2 * N - 1];
            next[s] = window;
        }
        coeff = std::move(next);
    }
    BigInt total = 1;
    for (std::int64_t hk : h) {
        std::int64_t s = hk + static_cast<std::int64_t>(n) * N;
        if (s < 0 || s >= static_cast<std::int64_t>(coeff.size())) return 0;
        total *= coeff[s];
    }
    return total;
}

RhoResult rho(const NumberField& K, const CensusSpec& spec) {
    RhoResult out;
    out.total = population(K, spec);
    const int n = spec.n;
    out.rho_k.assign(n / 2 + 1, 0);
    if (n == 1) return out;
    auto scan = scan_linear_factors(K, spec, true);
    out.rho_k[1] = scan.rho1;
    if (n <= 3) {
        out.rho = scan.rho1;
        return out;
    }
    PolyIndexer indexer(n, K.degree(), spec.N);
    struct State {
        std::unique_ptr<FactorSearch> fs;
        std::vector<std::uint64_t> rk;
        std::uint64_t reducible = 0;
    };
    const Bitset& hits = scan.hits;
    auto st = enumerate_parallel<State>(
        K, spec,
        [&] {
            State s;
            s.fs = std::make_unique<FactorSearch>(K);
            s.rk.assign(n / 2 + 1, 0);
            return s;
        },
        [&](State& s, const OPoly& f) {
            bool red = hits.test(indexer.index(f));
            for (int k = 2; 2 * k <= n; ++k) {
                if (s.fs->has_factor_of_degree(f, k)) {
                    ++s.rk[k];
                    red = true;
                }
            }
            if (red) ++s.reducible;
        },
        [](State& a, const State& b) {
            for (std::size_t k = 0; k < a.rk.size(); ++k) a.rk[k] += b.rk[k];
            a.reducible += b.reducible;
        });
    for (int k = 2; 2 * k <= n; ++k) out.rho_k[k] = st.rk[k];
    out.rho = st.reducible;
    return out;
}

RhoResult rho_by_search(const NumberField& K, const CensusSpec& spec) {
    RhoResult out;
    out.total = population(K, spec);
    const int n = spec.n;
    struct State {
        std::unique_ptr<FactorSearch> fs;
        std::vector<std::uint64_t> rk;
        std::uint64_t reducible = 0;
    };
    auto st = enumerate_parallel<State>(
        K, spec,
        [&] {
            State s;
            s.fs = std::make_unique<FactorSearch>(K);
            s.rk.assign(n / 2 + 1, 0);
            return s;
        },
        [&](State& s, const OPoly& f) {
            bool red = false;
            for (int k = 1; 2 * k <= n; ++k) {
                if (s.fs->has_factor_of_degree(f, k)) {
                    ++s.rk[k];
                    red = true;
                }
            }
            if (red) ++s.reducible;
        },
        [](State& a, const State& b) {
            for (std::size_t k = 0; k < a.rk.size(); ++k) a.rk[k] += b.rk[k];
            a.reducible += b.reducible;
        });
    out.rho_k = st.rk;
    out.rho = st.reducible;
    return out;
}

CensusReport census(const NumberField& K, const CensusSpec& spec, std::uint64_t seed) {
    CensusReport rep;
    rep.field_label = K.label();
    rep.basis = K.basis_description();
    rep.spec = spec;
    rep.seed = seed;
    auto r = rho(K, spec);
    rep.total = r.total;
    rep.rho_k = r.rho_k;
    rep.rho = r.rho;
    if (spec.n >= 2) {
        auto scan = scan_linear_factors(K, spec, true);
        rep.sum_T = scan.sum_T;
        rep.multi_linear = scan.multi;
        rep.T_table = std::move(scan.T);
    }
    const int d = K.degree();
    rep.L_table[std::vector<std::int64_t>(d, 0)] = L_count(spec, std::vector<std::int64_t>(d, 0));
    rep.L_table[std::vector<std::int64_t>(d, 1)] = L_count(spec, std::vector<std::int64_t>(d, 1));
    return rep;
}

}  // namespace vdw
