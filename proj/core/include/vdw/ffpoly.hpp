#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vdw/bigint.hpp"

namespace vdw {

/// Element of F_q. In a prime field this is the residue itself. In an
/// extension field 0 is zero and k+1 stands for g^k, g a fixed primitive
/// element, so both representations enumerate the field as 0..q-1 with 0 and
/// 1 the additive and multiplicative identities.
using Fq = std::uint32_t;

class FqField {
public:
    static constexpr std::uint64_t kMaxExtensionSize = 10000;

    static FqField prime(std::uint32_t p);
    /// F_{p^f} with the primitive modulus that is least in the order of
    /// (c_{f-1}, ..., c_0). Requires p^f ≤ kMaxExtensionSize.
    static FqField extension(std::uint32_t p, int f);
    static FqField of_size(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    int f() const { return f_; }
    std::uint64_t q() const { return q_; }
    bool is_prime_field() const { return f_ == 1; }
    /// Monic modulus over F_p, low to high; X - 0 style (degree 1) for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }
    Fq from_int(std::int64_t v) const;
    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq pow(Fq a, std::uint64_t e) const;

    /// Coordinates over F_p in the basis 1, g, ..., g^{f-1}.
    std::vector<std::uint32_t> to_digits(Fq a) const;
    Fq from_digits(const std::vector<std::uint32_t>& digits) const;
    /// Absolute trace to F_p.
    std::uint32_t trace(Fq a) const;

private:
    std::uint32_t p_ = 2;
    int f_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    // Extension tables: exp_[k] = digit encoding of g^k, log_[enc] = element.
    std::vector<std::uint32_t> exp_;
    std::vector<Fq> log_;
    std::vector<std::int32_t> zech_;  // log of 1 + g^k, or -1 when it is zero
};

/// Polynomial over F_q, coefficients low to high, no trailing zeros.
using FqPoly = std::vector<Fq>;

void ftrim(FqPoly& g);
int fdeg(const FqPoly& g);
FqPoly fadd(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fsub(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fmul(const FqField& F, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> fdivmod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fmod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fmonic(const FqField& F, const FqPoly& a);
FqPoly fgcd(const FqField& F, FqPoly a, FqPoly b);
FqPoly fderivative(const FqField& F, const FqPoly& a);
FqPoly fpowmod(const FqField& F, FqPoly base, std::uint64_t e, const FqPoly& m);
Fq feval(const FqField& F, const FqPoly& a, Fq x);
bool fis_squarefree(const FqField& F, const FqPoly& g);
std::string fto_string(const FqField& F, const FqPoly& g);

struct SplittingType {
    /// r[j-1] = number of irreducible factors of degree j.
    std::vector<int> r;

    int n() const;
    int at(int j) const { return j >= 1 && j <= static_cast<int>(r.size()) ? r[j - 1] : 0; }
    bool valid() const;
    std::string str() const;
    bool operator==(const SplittingType& o) const { return r == o.r; }
    bool operator<(const SplittingType& o) const { return r < o.r; }
};

/// Parses "(1,1,0)" or "1,1,0".
SplittingType parse_splitting_type(const std::string& s);

/// Every splitting type of degree n, in lexicographic order of r.
std::vector<SplittingType> all_splitting_types(int n);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<FqPoly, int>> factor(const FqField& F, const FqPoly& g, std::uint64_t seed = 1);

/// Factor degrees of a squarefree g via distinct-degree factorization;
/// counts[j-1] = number of degree-j factors.
std::vector<int> distinct_degree_counts(const FqField& F, const FqPoly& g);

/// Throws NotSquarefree if gcd(g, g') ≠ 1. g must be monic.
SplittingType splitting_type(const FqField& F, const FqPoly& g);

/// Splitting type, or nullopt (the ramified marker) when g is not squarefree.
std::optional<SplittingType> classify_reduction(const FqField& F, const FqPoly& g);

/// Number of monic degree-n polynomials over F_q with squarefree splitting
/// type r, by enumeration. Throws TooLarge when q^n > 10^7.
std::uint64_t count_type(const FqField& F, int n, const SplittingType& r);

/// Counts of every splitting type of degree n in one enumeration pass, in the
/// order of all_splitting_types(n); the final entry counts non-squarefree
/// polynomials.
std::vector<std::uint64_t> count_all_types(const FqField& F, int n);

}  // namespace vdw
