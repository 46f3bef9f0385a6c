#include "vdw/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "vdw/errors.hpp"

namespace vdw {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint8_t>(i);
    return c;
}

SplittingType cycle_type(const Perm& a) {
    const int n = static_cast<int>(a.size());
    SplittingType t;
    t.r.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        ++t.r[len - 1];
    }
    return t;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm parse_cycles(const std::string& s, int n) {
    Perm result = perm_identity(n);
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw ConfigError("bad cycle notation: " + s);
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw ConfigError("bad cycle notation: " + s);
        std::string body = s.substr(i + 1, close - i - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        std::vector<int> pts;
        int v;
        while (in >> v) {
            if (v < 1 || v > n) throw ConfigError("cycle point out of range: " + std::to_string(v));
            pts.push_back(v - 1);
        }
        if (std::set<int>(pts.begin(), pts.end()).size() != pts.size())
            throw ConfigError("repeated point in cycle: " + s);
        Perm c = perm_identity(n);
        for (std::size_t k = 0; k < pts.size(); ++k) c[pts[k]] = static_cast<std::uint8_t>(pts[(k + 1) % pts.size()]);
        result = perm_compose(result, c);
        i = close + 1;
    }
    return result;
}

std::string cycles_str(const Perm& a) {
    std::string out;
    std::vector<bool> seen(a.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == i) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            if (out.back() != '(') out += " ";
            out += std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int n) {
    std::set<Perm> seen{perm_identity(n)};
    std::vector<Perm> frontier{perm_identity(n)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Perm h = perm_compose(s, g);
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool is_transitive(const std::vector<Perm>& group, int n) {
    std::vector<bool> orbit(n, false);
    for (const auto& g : group) orbit[g[0]] = true;
    return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

std::vector<Perm> named_group_generators(const std::string& name, int n) {
    if (n < 1 || n > 8) throw ConfigError("group degree must be in 1..8");
    auto cycle = [&](int len) {
        Perm p = perm_identity(n);
        for (int i = 0; i < len; ++i) p[i] = static_cast<std::uint8_t>((i + 1) % len);
        return p;
    };
    auto transposition = [&](int a, int b) {
        Perm p = perm_identity(n);
        std::swap(p[a], p[b]);
        return p;
    };
    std::string s = name;
    if (s.size() > 2 && s[1] == '_') s.erase(1, 1);
    if (s == "S" || s == "S" + std::to_string(n)) {
        if (n == 1) return {perm_identity(1)};
        return {cycle(n), transposition(0, 1)};
    }
    if (s == "A" || s == "A" + std::to_string(n)) {
        if (n < 3) return {perm_identity(n)};
        std::vector<Perm> g;
        for (int k = 2; k < n; ++k) {
            Perm p = perm_identity(n);
            p[0] = 1;
            p[1] = static_cast<std::uint8_t>(k);
            p[k] = 0;
            g.push_back(p);
        }
        return g;
    }
    if (s == "C" || s == "C" + std::to_string(n)) return {cycle(n)};
    if (s == "D" || s == "D" + std::to_string(n)) {
        Perm refl = perm_identity(n);
        for (int i = 0; i < n; ++i) refl[i] = static_cast<std::uint8_t>((n - i) % n);
        return {cycle(n), refl};
    }
    if (s == "V4" || s == "V") {
        if (n != 4) throw ConfigError("V_4 is a subgroup of S_4 only");
        return {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
    }
    if (name.find('(') != std::string::npos) {
        std::vector<Perm> g;
        std::stringstream in(name);
        std::string part;
        while (std::getline(in, part, ';')) g.push_back(parse_cycles(part, n));
        return g;
    }
    throw ConfigError("unknown group: " + name);
}

}  // namespace vdw
