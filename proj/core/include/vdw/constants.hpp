#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/hp.hpp"
#include "vdw/ofield.hpp"

namespace vdw {

/// ∏_j |Σ_k σ_j(θ^k)| over the power basis.
hp::Real c_k_prime(const NumberField& K, int digits = 40);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Least-squares line through the cumulative ideal counts over [x/2, x].
LinearFit c_k_fit(const NumberField& K, std::uint64_t x);

struct DSum {
    double value = 0.0;
    std::uint64_t bound = 0;
    /// Coordinate box half-width used for the enumeration.
    std::uint64_t height = 0;
    std::uint64_t terms = 0;
    /// Estimate of the omitted part beyond the bound (unit rank 0 only).
    double tail = 0.0;
};

/// Σ |N(ν)|^{1-n} over ν ∈ O_K with 1 < |N(ν)| < bound. For positive unit
/// rank the sum runs over ht(ν) ≤ ⌈bound^{1/d}⌉.
DSum d_nk(const NumberField& K, int n, std::uint64_t bound, double c_k = 0.0);

/// Σ_{m ≤ x} a(m) m^{-s} plus the tail C_K x^{1-s}/(s-1).
double zeta_partial(const NumberField& K, double s, std::uint64_t x, double c_k);

struct KVolume {
    Rational exact;       ///< slab integration
    Rational irwin_hall;  ///< closed-form cross-check
    double lattice = 0.0; ///< L_count(N, 0)/N^{d(n-1)}
    std::int64_t lattice_N = 0;
};

/// Volume of {y ∈ [-1,1]^{n-1} : |Σ y| ≤ 1}.
Rational slab_volume(int n);
Rational irwin_hall_volume(int n);
KVolume k_nd(int n, int d, std::int64_t lattice_N = 200);

struct ConstantBundle {
    std::string field;
    int n = 3;
    int h = 1;
    double c_k = 0.0;
    double c_k_residual = 0.0;
    std::uint64_t c_k_x = 0;
    std::string c_k_prime;
    DSum D;
    double zeta = 0.0;  ///< ζ_K(n-1)
    bool D_within_zeta = true;
    KVolume k;
    /// 2^{d(n-1)}(D (C_K C'/h)^{n-1} + 1), the limit without the unit term.
    double formula_without_A = 0.0;
};

ConstantBundle constant_bundle(const NumberField& K, int n, std::uint64_t D_bound = 1000000,
                               std::uint64_t c_k_x = 1000000);

struct Theorem3Row {
    std::int64_t N = 0;
    std::uint64_t rho = 0;
    double ratio = 0.0;    ///< ρ/N^{d(n-1)}
    double D = 0.0;        ///< partial sum truncated at C'N^d
    double formula = 0.0;
    double gap = 0.0;      ///< |ratio - formula|
};

struct Theorem3Report {
    std::string field;
    int n = 3;
    double c_k = 0.0;
    double c_k_prime = 0.0;
    double A_hat = 0.0;
    std::int64_t A_N = 0;
    Rational k_exact;
    std::vector<Theorem3Row> rows;
    bool ratio_monotone = false;
    bool gap_decreasing = false;
};

/// Census ratios against the assembled limit; Â is the unit-root share at
/// the largest N.
Theorem3Report theorem3_compare(const NumberField& K, int n, const std::vector<std::int64_t>& N_grid,
                                unsigned workers = 1);

}  // namespace vdw
