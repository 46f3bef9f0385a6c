#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/census.hpp"
#include "vdw/ffpoly.hpp"
#include "vdw/ofield.hpp"
#include "vdw/primes.hpp"

namespace vdw {

/// Number of unramified ℘ with q ≤ x where f mod ℘ is squarefree of type r.
std::uint64_t pi_f_r(const NumberField& K, const OPoly& f, const SplittingType& r, std::uint64_t x);

/// Roots of f mod ℘ summed over unramified ℘ with q ≤ x and squarefree
/// reduction.
std::uint64_t pi_f(const NumberField& K, const OPoly& f, std::uint64_t x);

/// Default prime cutoff ⌈N^{d/2}⌉, at least 2.
std::uint64_t default_sieve_x(const NumberField& K, std::int64_t N);

struct DeviationRow {
    OPoly f;
    std::uint64_t pi_fr = 0;
    double D = 0.0;
};

struct DeviationReport {
    CensusSpec spec;
    SplittingType r;
    std::uint64_t x = 0;
    std::uint64_t population = 0;
    std::uint64_t pi_K = 0;
    Rational delta;
    double sum_sq = 0.0;
    double normalization = 0.0;  ///< N^{nd}·π_K(x)
    double ratio = 0.0;
    double threshold = 0.0;  ///< x^{1/2} log x
    std::uint64_t exceptional = 0;
    std::vector<DeviationRow> rows;  ///< filled only on request
};

DeviationReport deviation_sweep(const NumberField& K, const CensusSpec& spec, const SplittingType& r, std::uint64_t x,
                                bool keep_rows = false);

struct AvoidanceReport {
    CensusSpec spec;
    std::vector<SplittingType> R;
    std::uint64_t x = 0;
    std::uint64_t population = 0;
    std::uint64_t E = 0;
};

/// E_R(N): polynomials showing no type of R modulo any unramified ℘ with q ≤ x.
AvoidanceReport avoidance(const NumberField& K, const CensusSpec& spec, const std::vector<SplittingType>& R,
                          std::uint64_t x);

/// Σ γ^{ω(𝔞)} over squarefree ideals 𝔞 with N𝔞 ≤ x whose prime factors all
/// have norm ≥ t.
Rational selberg_sum(const NumberField& K, const Rational& gamma, std::uint64_t t, std::uint64_t x);

struct LargeSieveReport {
    int n = 1;
    std::int64_t N = 0;
    std::uint64_t x = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> moduli;  ///< norms of the prime ideals used
    std::uint64_t points = 0;           ///< |{ξ : H(ξ) ≤ N}|
    double scale = 0.0;                 ///< N^{nd} + x^{2n}
    std::vector<double> ratios;
    double max_ratio = 0.0;
    /// Largest relative deviation from Σ_a |S(a)|² = q^n Σ_v |W(v)|².
    double parseval_error = 0.0;
};

/// Brute-force additive character sums over all prime ideals of norm ≤ x
/// (x ≤ 64) for random complex weights on the height-N box of O_K^n.
LargeSieveReport large_sieve_check(const NumberField& K, int n, std::int64_t N, std::uint64_t x, int trials,
                                   std::uint64_t seed);

/// Same sums for fixed weights, indexed like the enumeration order of the box.
double large_sieve_ratio(const NumberField& K, int n, std::int64_t N, std::uint64_t x,
                         const std::vector<std::complex<double>>& weights, double* parseval_error = nullptr);

}  // namespace vdw
