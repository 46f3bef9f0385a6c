#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdw/bigint.hpp"
#include "vdw/census.hpp"
#include "vdw/hp.hpp"
#include "vdw/ofield.hpp"
#include "vdw/perm.hpp"

namespace vdw {

/// d_f = (-1)^{n(n-1)/2} Res(f, f') over O_K.
BigOElem poly_disc(const NumberField& K, const BigOPoly& f);
BigOElem poly_disc(const NumberField& K, const OPoly& f);

/// Sparse multivariate polynomial with integer coefficients; keys are
/// exponent vectors.
struct MPoly {
    std::map<std::vector<int>, BigInt> terms;
    int nvars = 0;

    static MPoly constant(int nvars, const BigInt& c);
    static MPoly variable(int nvars, int i);
    bool is_zero() const { return terms.empty(); }
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return terms == o.terms; }
    /// Exact division of every coefficient by c.
    MPoly divide(const BigInt& c) const;
    int degree_in(int var) const;
    /// Coefficient of var^k as a polynomial in the other variables.
    MPoly coefficient(int var, int k) const;
    std::string str(const std::vector<std::string>& names) const;
};

struct IteratedDisc {
    int n = 0;
    /// Names of the free coefficients, e.g. {"a1", "a2"}.
    std::vector<std::string> names;
    /// d_f as a polynomial in (α_0, free coefficients).
    MPoly disc_f;
    /// Discriminant of d_f as a polynomial in α_0.
    MPoly D;
};

/// Family X^n + α_{n-1}X^{n-1} + ... + α_1 X + α_0 over Z with α_0 symbolic.
/// fixed[k-1] pins α_k (k = 1..n-1) to an integer; nullopt keeps it symbolic.
/// Throws DegenerateFamily if D vanishes identically.
IteratedDisc iterated_disc(int n, const std::vector<std::optional<std::int64_t>>& fixed);

struct Resolvent {
    std::string group;
    std::vector<Perm> generators;
    int group_order = 0;
    std::vector<Perm> cosets;  ///< left coset representatives of S_n/G
    /// Sorted roots of σ_i(f), per embedding.
    std::vector<std::vector<hp::Complex>> roots;
    /// Φ coefficients from z^0 to z^{m-1} per embedding (monic, leading omitted).
    std::vector<std::vector<hp::Complex>> phi_numeric;
    BigOPoly phi;
    double residual = 0.0;
    int digits = 0;
};

/// Φ(z) = ∏_{σ ∈ S_n/G} (z - Σ_{τ∈G} ∏_k β_{στ(k)}^k), rounded to O_K.
Resolvent build_resolvent(const NumberField& K, const BigOPoly& f, const std::string& group);

/// Whether Φ has a root in O_K. Decides G_f ⊆ G (up to conjugacy) only when
/// Φ is squarefree; the invariant collapses on some families, e.g. the three D_4
/// values on X^4 + cX + d coincide.
bool resolvent_has_root(const NumberField& K, const Resolvent& r);
bool resolvent_has_root(const FactorSearch& fs, const Resolvent& r);
/// Exact test that Φ has distinct roots.
bool resolvent_is_squarefree(const NumberField& K, const Resolvent& r);

struct Theorem2Row {
    std::int64_t N = 0;
    std::uint64_t count = 0;
    std::uint64_t population = 0;
};

struct Theorem2Report {
    std::string field;
    int n = 3;
    std::string group;
    int index = 0;
    double bound_exponent = 0.0;  ///< d(n - 1 + 1/[S_n:G])
    std::vector<Theorem2Row> rows;
    double slope = 0.0;
    bool slope_ok = false;  ///< slope ≤ bound + 0.25
};

/// N_n(N, G) = #{f : G_f ≅ G} by exact classification on each grid point,
/// with a least-squares log-log slope.
Theorem2Report theorem2_sweep(const NumberField& K, int n, const std::string& group,
                              const std::vector<std::int64_t>& N_grid, unsigned workers = 1);

struct ResolventAgreement {
    std::uint64_t checked = 0;
    std::uint64_t with_root = 0;
    std::uint64_t square_disc = 0;
    std::uint64_t mismatches = 0;
    double max_residual = 0.0;
};

/// For every cubic with α_0 ≠ 0 and d_f ≠ 0 of height ≤ N: the A_3 resolvent
/// has a root in O_K exactly when d_f is a square.
ResolventAgreement a3_resolvent_agreement(const NumberField& K, std::int64_t N, unsigned workers = 1);

/// Least-squares slope of log y against log x over positive entries.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace vdw
