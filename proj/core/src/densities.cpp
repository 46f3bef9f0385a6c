#include "vdw/densities.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vdw/errors.hpp"
#include "vdw/perm.hpp"

namespace vdw {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_bruteforce(int n) {
    if (n < 1 || n > 8) throw TooLarge("brute-force over S_n needs 1 ≤ n ≤ 8");
}

}  // namespace

Rational delta_r(const SplittingType& r) {
    if (!r.valid()) throw ConfigError("invalid splitting type " + r.str());
    BigInt den = 1;
    for (int i = 1; i <= static_cast<int>(r.r.size()); ++i) {
        const int ri = r.at(i);
        for (int k = 0; k < ri; ++k) den *= i;
        den *= factorial(ri);
    }
    return Rational(BigInt(1), den);
}

Density delta_T(int n) {
    if (n < 2) throw ConfigError("delta_T needs n ≥ 2");
    const int j = n % 2 == 0 ? 2 : 3;
    const int m = n - j;
    BigInt half = factorial(m / 2);
    BigInt den = BigInt(1) << (m + 1);
    den *= half * half;
    return {Rational(factorial(m), den), "formula"};
}

Density delta_P(int n) {
    if (n < 2) throw ConfigError("delta_P needs n ≥ 2");
    Rational s = 0;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p) && 2 * p > n) s += Rational(1, p);
    return {s, "formula"};
}

bool in_T(const SplittingType& r) {
    if (r.at(2) != 1) return false;
    for (int j = 4; j <= r.n(); j += 2)
        if (r.at(j) != 0) return false;
    return true;
}

bool in_P(const SplittingType& r) {
    const int n = r.n();
    for (int p = 2; p <= n; ++p)
        if (is_prime(p) && 2 * p > n && r.at(p) >= 1) return true;
    return false;
}

Density delta_T_bruteforce(int n) {
    check_bruteforce(n);
    std::uint64_t hits = 0, total = 0;
    for (const auto& g : all_perms(n)) {
        ++total;
        if (in_T(cycle_type(g))) ++hits;
    }
    return {Rational(hits, total), "brute-force"};
}

Density delta_P_bruteforce(int n) {
    check_bruteforce(n);
    std::uint64_t hits = 0, total = 0;
    for (const auto& g : all_perms(n)) {
        ++total;
        if (in_P(cycle_type(g))) ++hits;
    }
    return {Rational(hits, total), "brute-force"};
}

TypeSets type_sets(int n) {
    TypeSets s;
    for (const auto& r : all_splitting_types(n)) {
        if (in_T(r)) s.T.push_back(r);
        if (in_P(r)) s.P.push_back(r);
    }
    return s;
}

Rational delta_total(int n) {
    Rational s = 0;
    for (const auto& r : all_splitting_types(n)) s += delta_r(r);
    return s;
}

Rational delta_first_moment(int n) {
    Rational s = 0;
    for (const auto& r : all_splitting_types(n)) s += delta_r(r) * r.at(1);
    return s;
}

namespace {

using ElemSet = std::vector<std::uint64_t>;

struct SymmetricGroup {
    int n;
    std::vector<Perm> elems;
    std::vector<std::vector<std::uint16_t>> mul;
    std::uint16_t identity = 0;

    explicit SymmetricGroup(int n_) : n(n_), elems(all_perms(n_)) {
        std::map<Perm, std::uint16_t> index;
        for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<std::uint16_t>(i);
        identity = index[perm_identity(n)];
        mul.assign(elems.size(), std::vector<std::uint16_t>(elems.size()));
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b) mul[a][b] = index[perm_compose(elems[a], elems[b])];
    }

    ElemSet closure(const std::vector<std::uint16_t>& gens) const {
        ElemSet set((elems.size() + 63) / 64, 0);
        std::vector<std::uint16_t> stack{identity};
        set[identity >> 6] |= std::uint64_t{1} << (identity & 63);
        while (!stack.empty()) {
            std::uint16_t g = stack.back();
            stack.pop_back();
            for (auto s : gens) {
                std::uint16_t h = mul[g][s];
                std::uint64_t bit = std::uint64_t{1} << (h & 63);
                if (set[h >> 6] & bit) continue;
                set[h >> 6] |= bit;
                stack.push_back(h);
            }
        }
        return set;
    }
};

bool subset_of(const ElemSet& a, const ElemSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

Lemma7Certificate lemma7_check(int n) {
    if (n < 1) throw ConfigError("lemma7_check needs n ≥ 1");
    if (n > 6) throw TooLarge("subgroup enumeration limited to n ≤ 6");
    SymmetricGroup S(n);
    std::map<ElemSet, std::vector<std::uint16_t>> groups;
    std::vector<std::pair<ElemSet, std::uint16_t>> cyclic;
    for (std::size_t g = 0; g < S.elems.size(); ++g) {
        auto set = S.closure({static_cast<std::uint16_t>(g)});
        if (groups.emplace(set, std::vector<std::uint16_t>{static_cast<std::uint16_t>(g)}).second)
            cyclic.emplace_back(set, static_cast<std::uint16_t>(g));
    }
    // Two and three generators: join each known subgroup with a cyclic one.
    for (int round = 0; round < 2; ++round) {
        std::vector<std::pair<ElemSet, std::vector<std::uint16_t>>> known(groups.begin(), groups.end());
        for (const auto& [H, gens] : known) {
            if (static_cast<int>(gens.size()) != round + 1) continue;
            for (const auto& [C, c] : cyclic) {
                if (subset_of(C, H)) continue;
                auto g2 = gens;
                g2.push_back(c);
                auto J = S.closure(g2);
                groups.emplace(std::move(J), std::move(g2));
            }
        }
    }
    Lemma7Certificate cert;
    cert.n = n;
    cert.subgroup_count = static_cast<int>(groups.size());
    const int full = static_cast<int>(S.elems.size());
    for (const auto& [set, gens] : groups) {
        std::vector<Perm> members;
        for (std::size_t i = 0; i < S.elems.size(); ++i)
            if ((set[i >> 6] >> (i & 63)) & 1u) members.push_back(S.elems[i]);
        if (!is_transitive(members, n)) continue;
        TransitiveSubgroup t;
        t.order = static_cast<int>(members.size());
        for (const auto& g : members) {
            auto ct = cycle_type(g);
            if (n >= 2 && ct.at(2) == 1 && ct.at(1) == n - 2) t.has_transposition = true;
            if (in_P(ct)) t.has_prime_cycle = true;
        }
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (k) t.generators += ", ";
            t.generators += cycles_str(S.elems[gens[k]]);
        }
        if (t.has_transposition && t.has_prime_cycle && t.order != full) cert.holds = false;
        cert.transitive.push_back(std::move(t));
    }
    std::stable_sort(cert.transitive.begin(), cert.transitive.end(),
                     [](const TransitiveSubgroup& a, const TransitiveSubgroup& b) { return a.order < b.order; });
    return cert;
}

}  // namespace vdw
