#include "vdw/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vdw/hp.hpp"
#include "vdw/ring.hpp"

namespace vdw {

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& f, const ZPoly& g) {
    if (f.empty() || g.empty()) return {};
    ZPoly r(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    trim(r);
    return r;
}

ZPoly zadd(const ZPoly& f, const ZPoly& g) {
    ZPoly r(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    trim(r);
    return r;
}

ZPoly zsub(const ZPoly& f, const ZPoly& g) {
    ZPoly r(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    trim(r);
    return r;
}

ZPoly zderivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
    trim(r);
    return r;
}

BigInt zeval(const ZPoly& f, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = acc * x + f[k];
    return acc;
}

std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& f, const ZPoly& g) {
    const int dg = degree(g);
    ZPoly rem = f;
    trim(rem);
    if (degree(rem) < dg) return {{}, rem};
    ZPoly quo(rem.size() - g.size() + 1);
    for (int i = degree(rem); i >= dg; --i) {
        BigInt c = rem[i];
        if (c == 0) continue;
        quo[i - dg] = c;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g[j];
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

BigInt zdisc_monic(const ZPoly& f) { return monic_discriminant(IntRing{}, std::vector<BigInt>(f.begin(), f.end())); }

bool zis_reducible_monic(const ZPoly& f) {
    const int n = degree(f);
    if (n <= 1) return false;
    if (f[0] == 0) return true;
    if (zdisc_monic(f) == 0) return true;

    BigInt maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, BigInt(abs(c)));
    int digits = 30 + static_cast<int>(maxc.str().size()) + n;
    hp::Bits bits = hp::digits_to_bits(digits);
    std::vector<hp::Complex> coeffs;
    for (int k = 0; k < n; ++k) coeffs.emplace_back(hp::Real(f[k], bits), hp::Real(bits));
    auto rs = hp::roots(coeffs);

    hp::Real quarter(0.25, bits);
    for (int k = 1; k <= n / 2; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<hp::Complex> prod{hp::Complex{hp::Real(1L, bits), hp::Real(bits)}};
            for (int i : idx) {
                std::vector<hp::Complex> next(prod.size() + 1, hp::Complex(bits));
                for (std::size_t j = 0; j < prod.size(); ++j) {
                    next[j + 1] += prod[j];
                    next[j] -= prod[j] * rs[i];
                }
                prod = std::move(next);
            }
            bool ok = true;
            ZPoly g(k + 1);
            for (int j = 0; j <= k && ok; ++j) {
                if (abs(prod[j].im) > quarter) ok = false;
                g[j] = prod[j].re.round();
            }
            if (ok) {
                auto [q, r] = zdivmod_monic(f, g);
                if (r.empty()) return true;
            }
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return false;
}

std::string zto_string(const ZPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(f); k >= 0; --k) {
        if (f[k] == 0) continue;
        BigInt c = f[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || k == 0) os << a;
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace vdw
