#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vdw/census.hpp"
#include "vdw/ffpoly.hpp"
#include "vdw/ofield.hpp"
#include "vdw/primes.hpp"

namespace vdw {

enum class Verdict { ProvenSn, ProvenNotSn, Undecided };

std::string verdict_str(Verdict v);

struct Witness {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    SplittingType type;
    /// "irreducible" (r_n = 1), "degree-pattern", "T" or "P".
    std::string role;
};

struct GaloisCertificate {
    Verdict verdict = Verdict::Undecided;
    std::string reason;
    /// Exact group label when the small-degree classifier decided.
    std::string group;
    std::uint64_t x_reached = 0;
    std::vector<Witness> witnesses;
};

/// x is a square in O_K; returns a square root.
std::optional<BigOElem> square_root(const NumberField& K, const BigOElem& x);

/// Exact Galois group of an irreducible f of degree 2, 3 or 4 over K:
/// C2, A3, S3, C4, V4, D4, A4 or S4. Throws Reducible.
std::string classify_small(const NumberField& K, const BigOPoly& f);
/// Same with a caller-owned search; nullopt when f is reducible.
std::optional<std::string> galois_group_small(const NumberField& K, const FactorSearch& fs, const BigOPoly& f);

/// Label of S_n for the classifier (C2, S3, S4).
std::string symmetric_label(int n);

/// Frobenius sampling over unramified ℘ with q ≤ x_max. Certificates are
/// one-sided; for n ≤ 4 an exact classification settles what sampling leaves
/// open when `exact_fallback` is set. Safe to share between threads.
class SnCertifier {
public:
    SnCertifier(const NumberField& K, int n, std::uint64_t x_max, bool exact_fallback = true);

    GaloisCertificate certify(const OPoly& f) const;
    GaloisCertificate certify(const BigOPoly& f) const;

private:
    template <class Poly>
    GaloisCertificate run(const Poly& f) const;

    const NumberField& K_;
    int n_;
    std::uint64_t x_max_;
    bool fallback_;
    std::shared_ptr<const ReductionTable> table_;
    FactorSearch search_;
};

GaloisCertificate certify_sn(const NumberField& K, const BigOPoly& f, std::uint64_t x_max = 500,
                             bool exact_fallback = true);

struct NonSnCensus {
    CensusSpec spec;
    std::uint64_t x_max = 0;
    std::uint64_t total = 0;
    std::uint64_t proven_sn = 0;
    std::uint64_t undecided = 0;
    std::uint64_t non_sn = 0;
    /// Group label → count over non-S_n polynomials; "reducible" for reducible f.
    std::map<std::string, std::uint64_t> by_group;
};

NonSnCensus non_sn_census(const NumberField& K, const CensusSpec& spec, std::uint64_t x_max = 500);

}  // namespace vdw
