#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vdw/ffpoly.hpp"
#include "vdw/ofield.hpp"

namespace vdw {

struct PrimeIdeal {
    std::uint64_t p = 0;
    /// Monic irreducible factor of the defining polynomial mod p, low to high.
    std::vector<std::uint32_t> local_factor;
    int f = 1;  ///< residue degree
    int e = 1;  ///< ramification index
    std::uint64_t q = 0;  ///< norm p^f
    /// e = 1 and p does not divide disc(K).
    bool unramified = true;
};

/// Primes of O_K above p by Dedekind's criterion, sorted by (f, local factor).
std::vector<PrimeIdeal> primes_above(const NumberField& K, std::uint64_t p);

/// Rational primes ≤ x.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

struct PrimeNorm {
    std::uint64_t q;
    bool unramified;
};

/// Norms of all prime ideals with norm ≤ x, ascending, one entry per ideal.
std::vector<PrimeNorm> prime_ideal_norms(const NumberField& K, std::uint64_t x);

/// Full prime ideals with norm ≤ x, ascending by norm.
std::vector<PrimeIdeal> prime_ideals_up_to(const NumberField& K, std::uint64_t x);

/// Number of prime ideals of norm ≤ x.
std::uint64_t pi_K(const NumberField& K, std::uint64_t x);

/// Reduction O_K → O_K/℘ ≅ F_q, sending θ to a fixed root of the local factor.
class ResidueMap {
public:
    /// Extension residue fields need q ≤ 10^4.
    ResidueMap(const NumberField& K, const PrimeIdeal& P);

    const PrimeIdeal& prime() const { return P_; }
    const FqField& field() const { return *F_; }
    Fq theta_image() const { return theta_pows_.size() > 1 ? theta_pows_[1] : theta1_; }

    Fq reduce(const OElem& a) const;
    Fq reduce(const BigOElem& a) const;
    /// Monic reduction of f, low to high with the leading one included.
    FqPoly reduce_poly(const OPoly& f) const;

private:
    PrimeIdeal P_;
    std::shared_ptr<const FqField> F_;
    std::vector<Fq> theta_pows_;
    Fq theta1_ = 0;
    int d_ = 1;
};

FqPoly reduce_poly(const NumberField& K, const OPoly& f, const PrimeIdeal& P);

/// Unramified primes up to x with cached splitting-type lookups for degree-n
/// polynomials. Classification of a reduction is a table lookup when q^n is
/// small and a distinct-degree factorization otherwise.
class ReductionTable {
public:
    static constexpr std::uint64_t kLookupLimit = 1u << 14;

    ReductionTable(const NumberField& K, int n, std::uint64_t x);

    int n() const { return n_; }
    std::uint64_t x() const { return x_; }
    std::size_t size() const { return maps_.size(); }
    const ResidueMap& map(std::size_t i) const { return maps_[i]; }
    const std::vector<SplittingType>& types() const { return types_; }
    /// Index into types(), or -1 when f mod ℘_i is not squarefree.
    int classify(const OPoly& f, std::size_t i) const;
    int classify_reduced(const FqPoly& g, std::size_t i) const;

private:
    int n_;
    std::uint64_t x_;
    std::vector<ResidueMap> maps_;
    std::vector<SplittingType> types_;
    std::vector<std::vector<std::int16_t>> lookup_;
};

struct IdealCounter {
    std::uint64_t x = 0;
    /// a[m] = number of ideals of norm m, a[0] unused.
    std::vector<std::uint32_t> a;
    std::uint64_t cumulative(std::uint64_t m) const;
};

/// Ideal counts up to x ≤ 10^7 via multiplicative extension over prime ideals.
IdealCounter ideal_counts(const NumberField& K, std::uint64_t x);

}  // namespace vdw
