#include "vdw/ffpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "vdw/errors.hpp"

namespace vdw {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FqField FqField::prime(std::uint32_t p) {
    if (!is_prime_u64(p)) throw ConfigError("not a prime: " + std::to_string(p));
    FqField F;
    F.p_ = p;
    F.f_ = 1;
    F.q_ = p;
    F.modulus_ = {0, 1};
    return F;
}

FqField FqField::extension(std::uint32_t p, int f) {
    if (f == 1) return prime(p);
    if (!is_prime_u64(p)) throw ConfigError("not a prime: " + std::to_string(p));
    if (f < 1) throw ConfigError("extension degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > kMaxExtensionSize) throw TooLarge("extension field larger than 10^4 elements");
    }
    FqField F;
    F.p_ = p;
    F.f_ = f;
    F.q_ = q;

    const std::uint32_t order = static_cast<std::uint32_t>(q - 1);
    std::vector<std::uint32_t> digits(f), mod(f);
    std::vector<std::uint32_t> pw(f + 1, 1);
    for (int i = 1; i <= f; ++i) pw[i] = pw[i - 1] * p;
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        std::uint32_t e = 0;
        for (int i = f - 1; i >= 0; --i) e = e * p + d[i];
        return e;
    };

    for (std::uint32_t code = 0; code < q; ++code) {
        for (int i = 0; i < f; ++i) mod[i] = (code / pw[i]) % p;
        if (mod[0] == 0) continue;
        // Walk the powers of X modulo X^f + Σ mod[i] X^i.
        std::vector<std::uint32_t> exps;
        exps.reserve(order);
        std::fill(digits.begin(), digits.end(), 0);
        digits[0] = 1;
        bool primitive = true;
        for (std::uint32_t k = 0; k < order; ++k) {
            std::uint32_t e = encode(digits);
            if (k > 0 && e == 1) {
                primitive = false;
                break;
            }
            exps.push_back(e);
            std::uint32_t top = digits[f - 1];
            for (int i = f - 1; i >= 1; --i) digits[i] = digits[i - 1];
            digits[0] = 0;
            for (int i = 0; i < f; ++i) digits[i] = static_cast<std::uint32_t>((digits[i] + (std::uint64_t)(p - mod[i]) * top) % p);
        }
        if (!primitive || encode(digits) != 1) continue;
        F.modulus_.assign(mod.begin(), mod.end());
        F.modulus_.push_back(1);
        F.exp_ = std::move(exps);
        F.log_.assign(q, 0);
        for (std::uint32_t k = 0; k < order; ++k) F.log_[F.exp_[k]] = k + 1;
        F.zech_.assign(order, -1);
        for (std::uint32_t k = 0; k < order; ++k) {
            std::uint32_t e = F.exp_[k];
            std::uint32_t d0 = e % p;
            std::uint32_t e1 = e - d0 + (d0 + 1) % p;
            F.zech_[k] = e1 == 0 ? -1 : static_cast<std::int32_t>(F.log_[e1] - 1);
        }
        return F;
    }
    throw Error("no primitive modulus found");
}

FqField FqField::of_size(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        int f = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++f;
        }
        if (r != 1) throw ConfigError("not a prime power: " + std::to_string(q));
        return extension(static_cast<std::uint32_t>(p), f);
    }
    throw ConfigError("not a prime power: " + std::to_string(q));
}

Fq FqField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    if (f_ == 1) return static_cast<Fq>(m);
    return m == 0 ? 0 : log_[m];
}

Fq FqField::add(Fq a, Fq b) const {
    if (f_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Fq>(s >= p_ ? s - p_ : s);
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t order = static_cast<std::uint32_t>(q_ - 1);
    std::uint32_t i = a - 1, j = b - 1;
    std::uint32_t k = j >= i ? j - i : j + order - i;
    std::int32_t z = zech_[k];
    if (z < 0) return 0;
    return (i + static_cast<std::uint32_t>(z)) % order + 1;
}

Fq FqField::neg(Fq a) const {
    if (a == 0) return 0;
    if (f_ == 1) return p_ - a;
    if (p_ == 2) return a;
    const std::uint32_t order = static_cast<std::uint32_t>(q_ - 1);
    return (a - 1 + order / 2) % order + 1;
}

Fq FqField::mul(Fq a, Fq b) const {
    if (f_ == 1) return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    const std::uint32_t order = static_cast<std::uint32_t>(q_ - 1);
    return (a - 1 + b - 1) % order + 1;
}

Fq FqField::inv(Fq a) const {
    if (a == 0) throw Error("inverse of zero in finite field");
    if (f_ == 1) return pow(a, p_ - 2);
    const std::uint32_t order = static_cast<std::uint32_t>(q_ - 1);
    return (order - (a - 1)) % order + 1;
}

Fq FqField::pow(Fq a, std::uint64_t e) const {
    Fq r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> FqField::to_digits(Fq a) const {
    std::vector<std::uint32_t> d(f_, 0);
    if (f_ == 1) {
        d[0] = a;
        return d;
    }
    if (a == 0) return d;
    std::uint32_t e = exp_[a - 1];
    for (int i = 0; i < f_; ++i) {
        d[i] = e % p_;
        e /= p_;
    }
    return d;
}

Fq FqField::from_digits(const std::vector<std::uint32_t>& digits) const {
    if (f_ == 1) return digits.empty() ? 0 : digits[0] % p_;
    std::uint32_t e = 0;
    for (int i = f_ - 1; i >= 0; --i) e = e * p_ + (i < static_cast<int>(digits.size()) ? digits[i] % p_ : 0);
    return e == 0 ? 0 : log_[e];
}

std::uint32_t FqField::trace(Fq a) const {
    if (f_ == 1) return a;
    Fq s = 0, t = a;
    for (int j = 0; j < f_; ++j) {
        s = add(s, t);
        t = pow(t, p_);
    }
    return to_digits(s)[0];
}

void ftrim(FqPoly& g) {
    while (!g.empty() && g.back() == 0) g.pop_back();
}

int fdeg(const FqPoly& g) { return static_cast<int>(g.size()) - 1; }

FqPoly fadd(const FqField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Fq x = i < a.size() ? a[i] : 0;
        Fq y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    ftrim(r);
    return r;
}

FqPoly fsub(const FqField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Fq x = i < a.size() ? a[i] : 0;
        Fq y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    ftrim(r);
    return r;
}

FqPoly fmul(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ftrim(r);
    return r;
}

std::pair<FqPoly, FqPoly> fdivmod(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (b.empty()) throw Error("polynomial division by zero");
    FqPoly rem = a;
    ftrim(rem);
    const int db = fdeg(b);
    if (fdeg(rem) < db) return {{}, rem};
    FqPoly quo(rem.size() - b.size() + 1, 0);
    const Fq lead_inv = F.inv(b.back());
    for (int i = fdeg(rem); i >= db; --i) {
        Fq c = rem[i];
        if (c == 0) continue;
        c = F.mul(c, lead_inv);
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]));
    }
    ftrim(rem);
    ftrim(quo);
    return {quo, rem};
}

FqPoly fmod(const FqField& F, const FqPoly& a, const FqPoly& b) { return fdivmod(F, a, b).second; }

FqPoly fmonic(const FqField& F, const FqPoly& a) {
    if (a.empty() || a.back() == 1) return a;
    Fq inv = F.inv(a.back());
    FqPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
    return r;
}

FqPoly fgcd(const FqField& F, FqPoly a, FqPoly b) {
    ftrim(a);
    ftrim(b);
    while (!b.empty()) {
        FqPoly r = fmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fmonic(F, a);
}

FqPoly fderivative(const FqField& F, const FqPoly& a) {
    if (a.size() <= 1) return {};
    FqPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
    ftrim(r);
    return r;
}

FqPoly fpowmod(const FqField& F, FqPoly base, std::uint64_t e, const FqPoly& m) {
    FqPoly r{F.one()};
    base = fmod(F, base, m);
    while (e) {
        if (e & 1) r = fmod(F, fmul(F, r, base), m);
        e >>= 1;
        if (e) base = fmod(F, fmul(F, base, base), m);
    }
    return r;
}

Fq feval(const FqField& F, const FqPoly& a, Fq x) {
    Fq acc = 0;
    for (std::size_t k = a.size(); k-- > 0;) acc = F.add(F.mul(acc, x), a[k]);
    return acc;
}

bool fis_squarefree(const FqField& F, const FqPoly& g) {
    FqPoly d = fderivative(F, g);
    if (d.empty()) return fdeg(g) <= 0;
    return fdeg(fgcd(F, g, d)) == 0;
}

std::string fto_string(const FqField& F, const FqPoly& g) {
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = fdeg(g); k >= 0; --k) {
        if (g[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string c;
        if (F.is_prime_field()) c = std::to_string(g[k]);
        else c = g[k] == 1 ? "1" : "g^" + std::to_string(g[k] - 1);
        if (c != "1" || k == 0) os << c;
        if (k >= 1) os << "X";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

int SplittingType::n() const {
    int s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) s += static_cast<int>(j + 1) * r[j];
    return s;
}

bool SplittingType::valid() const {
    for (int v : r)
        if (v < 0) return false;
    return n() == static_cast<int>(r.size()) && !r.empty();
}

std::string SplittingType::str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
    return s + ")";
}

SplittingType parse_splitting_type(const std::string& s) {
    SplittingType t;
    std::string cur;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') cur += ch;
        else if (ch == ',' || ch == ')' || ch == ' ') {
            if (!cur.empty()) t.r.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch != '(') {
            throw ConfigError("bad splitting type: " + s);
        }
    }
    if (!cur.empty()) t.r.push_back(std::stoi(cur));
    if (!t.valid()) throw ConfigError("splitting type must satisfy sum i*r_i = n: " + s);
    return t;
}

std::vector<SplittingType> all_splitting_types(int n) {
    std::vector<SplittingType> out;
    std::vector<int> r(n, 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == 0) {
            if (left == 0) out.push_back({r});
            return;
        }
        for (int c = 0; c * j <= left; ++c) {
            r[j - 1] = c;
            rec(j - 1, left - c * j);
        }
        r[j - 1] = 0;
    };
    if (n >= 1) rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> distinct_degree_counts(const FqField& F, const FqPoly& g0) {
    FqPoly g = fmonic(F, g0);
    const int n = fdeg(g);
    std::vector<int> counts(std::max(n, 0), 0);
    FqPoly x{0, 1};
    FqPoly h = x;  // X^{q^i} mod g
    int i = 0;
    while (fdeg(g) >= 2 * (i + 1)) {
        ++i;
        h = fpowmod(F, h, F.q(), g);
        FqPoly d = fgcd(F, g, fsub(F, h, x));
        int dd = fdeg(d);
        if (dd > 0) {
            counts[i - 1] += dd / i;
            g = fdivmod(F, g, d).first;
            h = fmod(F, h, g);
        }
    }
    if (fdeg(g) > 0) counts[fdeg(g) - 1] += 1;
    return counts;
}

SplittingType splitting_type(const FqField& F, const FqPoly& g) {
    if (g.empty() || g.back() != 1) throw ConfigError("splitting_type needs a monic polynomial");
    if (!fis_squarefree(F, g)) throw NotSquarefree("polynomial is not squarefree: " + fto_string(F, g));
    return {distinct_degree_counts(F, g)};
}

std::optional<SplittingType> classify_reduction(const FqField& F, const FqPoly& g) {
    if (!fis_squarefree(F, g)) return std::nullopt;
    return SplittingType{distinct_degree_counts(F, g)};
}

namespace {

using Rng = std::mt19937_64;

FqPoly pth_root(const FqField& F, const FqPoly& c) {
    const std::uint32_t p = F.p();
    FqPoly r(c.size() / p + 1, 0);
    std::uint64_t e = F.q() / p;
    for (std::size_t i = 0; i < c.size(); i += p) r[i / p] = F.pow(c[i], e);
    ftrim(r);
    return r;
}

void squarefree_decomposition(const FqField& F, const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
    FqPoly df = fderivative(F, f);
    FqPoly c = fgcd(F, f, df);
    FqPoly w = fdivmod(F, f, c).first;
    int i = 1;
    while (fdeg(w) > 0) {
        FqPoly y = fgcd(F, w, c);
        FqPoly fac = fdivmod(F, w, y).first;
        if (fdeg(fac) > 0) out.emplace_back(fmonic(F, fac), i * mult);
        w = y;
        c = fdivmod(F, c, y).first;
        ++i;
    }
    if (fdeg(c) > 0) squarefree_decomposition(F, pth_root(F, c), mult * static_cast<int>(F.p()), out);
}

void equal_degree(const FqField& F, const FqPoly& g, int k, Rng& rng, std::vector<FqPoly>& out) {
    const int n = fdeg(g);
    if (n == k) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    while (true) {
        FqPoly a(n);
        for (auto& c : a) c = static_cast<Fq>(dist(rng));
        ftrim(a);
        if (fdeg(a) < 1) continue;
        FqPoly b;
        if (F.p() == 2) {
            // Absolute trace map a + a^2 + ... + a^{2^{kf-1}}.
            FqPoly t = fmod(F, a, g);
            b = t;
            for (int j = 1; j < k * F.f(); ++j) {
                t = fmod(F, fmul(F, t, t), g);
                b = fadd(F, b, t);
            }
        } else {
            // (a^{1 + q + ... + q^{k-1}})^{(q-1)/2} - 1.
            FqPoly prod = fmod(F, a, g), t = prod;
            for (int j = 1; j < k; ++j) {
                t = fpowmod(F, t, F.q(), g);
                prod = fmod(F, fmul(F, prod, t), g);
            }
            b = fsub(F, fpowmod(F, prod, (F.q() - 1) / 2, g), FqPoly{F.one()});
        }
        FqPoly h = fgcd(F, g, b);
        int dh = fdeg(h);
        if (dh > 0 && dh < n) {
            equal_degree(F, h, k, rng, out);
            equal_degree(F, fmonic(F, fdivmod(F, g, h).first), k, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FqField& F, const FqPoly& g0, std::uint64_t seed) {
    FqPoly g = g0;
    ftrim(g);
    if (g.empty()) throw ConfigError("cannot factor the zero polynomial");
    g = fmonic(F, g);
    std::vector<std::pair<FqPoly, int>> out;
    if (fdeg(g) == 0) return out;
    Rng rng(seed);
    std::vector<std::pair<FqPoly, int>> sqf;
    squarefree_decomposition(F, g, 1, sqf);
    FqPoly x{0, 1};
    for (auto& [part, mult] : sqf) {
        FqPoly rest = part;
        FqPoly h = x;
        int i = 0;
        while (fdeg(rest) >= 2 * (i + 1)) {
            ++i;
            h = fpowmod(F, h, F.q(), rest);
            FqPoly d = fgcd(F, rest, fsub(F, h, x));
            if (fdeg(d) > 0) {
                std::vector<FqPoly> pieces;
                equal_degree(F, d, i, rng, pieces);
                for (auto& pc : pieces) out.emplace_back(pc, mult);
                rest = fdivmod(F, rest, d).first;
                h = fmod(F, h, rest);
            }
        }
        if (fdeg(rest) > 0) out.emplace_back(fmonic(F, rest), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    // Merge identical factors arising from separate squarefree layers.
    std::vector<std::pair<FqPoly, int>> merged;
    for (auto& pr : out) {
        if (!merged.empty() && merged.back().first == pr.first) merged.back().second += pr.second;
        else merged.push_back(pr);
    }
    return merged;
}

namespace {

void check_enumerable(const FqField& F, int n) {
    long double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<long double>(F.q());
    if (total > 1e7L) throw TooLarge("q^n = " + std::to_string(static_cast<double>(total)) + " exceeds the 10^7 guard");
}

template <class Fn>
void for_each_monic(const FqField& F, int n, Fn&& fn) {
    FqPoly g(n + 1, 0);
    g[n] = F.one();
    while (true) {
        fn(g);
        int pos = 0;
        while (pos < n && g[pos] == F.q() - 1) {
            g[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++g[pos];
    }
}

}  // namespace

std::uint64_t count_type(const FqField& F, int n, const SplittingType& r) {
    if (!r.valid() || r.n() != n) throw ConfigError("splitting type " + r.str() + " does not have degree " + std::to_string(n));
    check_enumerable(F, n);
    std::uint64_t count = 0;
    for_each_monic(F, n, [&](const FqPoly& g) {
        auto t = classify_reduction(F, g);
        if (t && *t == r) ++count;
    });
    return count;
}

std::vector<std::uint64_t> count_all_types(const FqField& F, int n) {
    check_enumerable(F, n);
    auto types = all_splitting_types(n);
    std::vector<std::uint64_t> counts(types.size() + 1, 0);
    for_each_monic(F, n, [&](const FqPoly& g) {
        auto t = classify_reduction(F, g);
        if (!t) {
            ++counts.back();
            return;
        }
        auto it = std::lower_bound(types.begin(), types.end(), *t);
        ++counts[it - types.begin()];
    });
    return counts;
}

}  // namespace vdw
