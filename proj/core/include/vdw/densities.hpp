#pragma once

#include <string>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/ffpoly.hpp"

namespace vdw {

struct Density {
    Rational value;
    /// "formula", "brute-force" or "type-set sum".
    std::string provenance;
};

/// ∏_i 1/(i^{r_i} r_i!).
Rational delta_r(const SplittingType& r);

/// Closed form for the share of S_n with one 2-cycle and no other even cycle.
Density delta_T(int n);
/// Σ 1/p over primes n/2 < p ≤ n.
Density delta_P(int n);

/// Exact fractions of S_n by enumeration, n ≤ 8.
Density delta_T_bruteforce(int n);
Density delta_P_bruteforce(int n);

bool in_T(const SplittingType& r);
/// Contains a p-cycle for some prime p > n/2.
bool in_P(const SplittingType& r);

struct TypeSets {
    std::vector<SplittingType> T;
    std::vector<SplittingType> P;
};
TypeSets type_sets(int n);

/// Σ over all types of degree n of delta_r, and of r_1·delta_r.
Rational delta_total(int n);
Rational delta_first_moment(int n);

struct TransitiveSubgroup {
    int order = 0;
    bool has_transposition = false;
    bool has_prime_cycle = false;  ///< a p-cycle with p prime, p > n/2
    std::string generators;
};

struct Lemma7Certificate {
    int n = 0;
    int subgroup_count = 0;
    std::vector<TransitiveSubgroup> transitive;
    /// Every transitive subgroup with a transposition and a large prime cycle is S_n.
    bool holds = true;
};

/// All subgroups of S_n (n ≤ 6) by closure of up to three generators.
Lemma7Certificate lemma7_check(int n);

}  // namespace vdw
