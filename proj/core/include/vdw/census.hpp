#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/errors.hpp"
#include "vdw/ofield.hpp"
#include "vdw/primes.hpp"

namespace vdw {

inline constexpr std::uint64_t kVisitGuard = 1000000000ULL;

struct CensusSpec {
    int n = 3;
    std::int64_t N = 1;
    unsigned workers = 1;
};

/// (2N+1)^{nd}; throws TooLarge above the visit guard.
std::uint64_t population(const NumberField& K, const CensusSpec& spec);

/// Position of f in the enumeration order: Σ (a_pos + N)(2N+1)^pos over
/// pos = k·d + i, where a_pos is coordinate i of α_k.
class PolyIndexer {
public:
    PolyIndexer(int n, int d, std::int64_t N);
    std::uint64_t index(const OPoly& f) const;
    OPoly poly(std::uint64_t idx) const;
    std::uint64_t size() const { return size_; }

private:
    int n_, d_;
    std::int64_t N_;
    std::uint64_t base_;
    std::uint64_t size_;
};

/// Visits every monic f with ht(f) ≤ N exactly once, first coordinate of
/// α_0 varying fastest. The slab argument restricts the last coordinate to
/// [lo, hi] and exists for partitioned runs.
void enumerate(const NumberField& K, const CensusSpec& spec, const std::function<void(const OPoly&)>& visit);
void enumerate_slab(const NumberField& K, const CensusSpec& spec, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const OPoly&)>& visit);

/// Partitions the population by ranges of the last coordinate, runs one fold
/// per worker and merges the states in partition order.
template <class State, class MakeState, class Visit, class Merge>
State enumerate_parallel(const NumberField& K, const CensusSpec& spec, MakeState make_state, Visit visit,
                         Merge merge) {
    population(K, spec);
    const std::int64_t N = spec.N;
    const std::int64_t width = 2 * N + 1;
    unsigned workers = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(width)));
    std::vector<State> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());
    auto run = [&](unsigned w) {
        std::int64_t lo = -N + width * w / workers;
        std::int64_t hi = -N + width * (w + 1) / workers - 1;
        State& st = states[w];
        enumerate_slab(K, spec, lo, hi, [&](const OPoly& f) { visit(st, f); });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    State total = std::move(states[0]);
    for (unsigned w = 1; w < workers; ++w) merge(total, states[w]);
    return total;
}

/// Exact search for monic factors over O_K. Keeps the prefilter primes and
/// embedding data for repeated use.
class FactorSearch {
public:
    explicit FactorSearch(const NumberField& K);

    const NumberField& field() const { return K_; }

    /// A monic factor of degree k, or nullopt.
    std::optional<BigOPoly> find_factor(const BigOPoly& f, int k) const;
    bool has_factor_of_degree(const OPoly& f, int k) const;
    bool is_reducible(const OPoly& f) const;
    bool is_reducible(const BigOPoly& f) const;
    /// Distinct roots of f in O_K.
    std::vector<BigOElem> roots(const BigOPoly& f) const;

private:
    std::optional<BigOPoly> search_nonzero_constant(const BigOPoly& f, int k) const;
    std::optional<BigOPoly> numeric_search(const BigOPoly& f, int k, bool high_precision, bool* ambiguous) const;
    bool degree_possible(const BigOPoly& f, int k) const;

    const NumberField& K_;
    std::vector<ResidueMap> filter_;
};

bool has_factor_of_degree(const NumberField& K, const OPoly& f, int k);
std::vector<BigOElem> roots_in_ok(const NumberField& K, const BigOPoly& f);

/// Dense bit array over the population.
class Bitset {
public:
    explicit Bitset(std::uint64_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    /// Sets bit i and returns its previous value.
    bool test_and_set(std::uint64_t i) {
        std::uint64_t& w = words_[i >> 6];
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        bool was = (w & m) != 0;
        w |= m;
        return was;
    }
    std::uint64_t count() const;
    std::uint64_t size() const { return n_; }

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> words_;
};

/// Linear-factor census through quotients: every f = (X + ν)·g with
/// ht(f) ≤ N is generated from ν and the monic quotient g.
struct LinearFactorScan {
    std::uint64_t total = 0;
    /// Number of f with at least one linear factor.
    std::uint64_t rho1 = 0;
    /// Σ_ν T(ν).
    std::uint64_t sum_T = 0;
    /// Number of f with two or more distinct linear factors.
    std::uint64_t multi = 0;
    /// ν → T(ν) for every ν with T(ν) > 0.
    std::map<OElem, std::uint64_t> T;
    /// Bound on |σ_i(ν)| used for the ν box.
    std::vector<double> root_radius;
    Bitset hits;
};

LinearFactorScan scan_linear_factors(const NumberField& K, const CensusSpec& spec, bool keep_bitset = true);

/// |{f : (X + ν) | f, ht(f) ≤ N}|.
std::uint64_t T_count(const NumberField& K, const CensusSpec& spec, const OElem& nu);

/// Σ_ν T(ν) over units ν.
std::uint64_t T_units(const NumberField& K, const CensusSpec& spec);

/// Product over the d coordinates of #{n-tuples in [-N, N]^n with sum h_k}.
BigInt L_count(const CensusSpec& spec, const std::vector<std::int64_t>& h);

struct RhoResult {
    std::uint64_t total = 0;
    /// rho_k[k] for 1 ≤ k ≤ n/2; index 0 unused.
    std::vector<std::uint64_t> rho_k;
    std::uint64_t rho = 0;
};

/// Exact ρ_k and ρ. Linear factors come from the quotient scan; higher
/// degrees from FactorSearch.
RhoResult rho(const NumberField& K, const CensusSpec& spec);

/// Same numbers from FactorSearch alone, for cross-checking.
RhoResult rho_by_search(const NumberField& K, const CensusSpec& spec);

struct CensusReport {
    std::string field_label;
    std::string basis;
    CensusSpec spec;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> rho_k;
    std::uint64_t rho = 0;
    std::uint64_t sum_T = 0;
    std::uint64_t multi_linear = 0;
    std::map<OElem, std::uint64_t> T_table;
    std::map<std::vector<std::int64_t>, BigInt> L_table;
    std::uint64_t seed = 0;
};

CensusReport census(const NumberField& K, const CensusSpec& spec, std::uint64_t seed = 0);

}  // namespace vdw
