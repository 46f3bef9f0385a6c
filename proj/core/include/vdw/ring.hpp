#pragma once

// Division-free linear algebra over a commutative ring. A ring adaptor R
// provides: typename R::T, zero(), one(), add, sub, mul, neg.

#include <cstddef>
#include <vector>

#include "vdw/bigint.hpp"

namespace vdw {

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct IntRing {
    using T = BigInt;
    T zero() const { return 0; }
    T one() const { return 1; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
};

/// Characteristic polynomial det(xI - A), coefficients from x^n down to x^0,
/// by Berkowitz's algorithm. Uses only ring operations, O(n^4).
template <class R>
std::vector<typename R::T> charpoly_berkowitz(const R& ring, const Matrix<typename R::T>& a) {
    using T = typename R::T;
    const std::size_t n = a.size();
    std::vector<T> p{ring.one()};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C.
        std::vector<T> t;
        t.reserve(r + 2);
        t.push_back(ring.one());
        t.push_back(ring.neg(a[r][r]));
        std::vector<T> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            T dot = ring.zero();
            for (std::size_t i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(a[r][i], col[i]));
            t.push_back(ring.neg(dot));
            if (k + 1 < r) {
                std::vector<T> next(r, ring.zero());
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) next[i] = ring.add(next[i], ring.mul(a[i][j], col[j]));
                col = std::move(next);
            }
        }
        std::vector<T> q(r + 2, ring.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < p.size(); ++j) q[i] = ring.add(q[i], ring.mul(t[i - j], p[j]));
        p = std::move(q);
    }
    return p;
}

template <class R>
typename R::T det_berkowitz(const R& ring, const Matrix<typename R::T>& a) {
    if (a.empty()) return ring.one();
    auto p = charpoly_berkowitz(ring, a);
    return (a.size() % 2 == 0) ? p.back() : ring.neg(p.back());
}

/// Sylvester matrix of f and g given low-to-high coefficient lists.
template <class R>
Matrix<typename R::T> sylvester(const R& ring, const std::vector<typename R::T>& f,
                                const std::vector<typename R::T>& g) {
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    const std::size_t s = m + n;
    Matrix<typename R::T> mat(s, std::vector<typename R::T>(s, ring.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = g[n - j];
    return mat;
}

template <class R>
typename R::T resultant(const R& ring, const std::vector<typename R::T>& f, const std::vector<typename R::T>& g) {
    return det_berkowitz(ring, sylvester(ring, f, g));
}

/// (-1)^{n(n-1)/2} Res(f, f') for f given low-to-high with leading coefficient
/// one. Degree 1 gives 1 and degree 0 gives 1 by convention.
template <class R>
typename R::T monic_discriminant(const R& ring, const std::vector<typename R::T>& f) {
    using T = typename R::T;
    const std::size_t n = f.size() - 1;
    if (n <= 1) return ring.one();
    std::vector<T> df(n);
    for (std::size_t i = 1; i <= n; ++i) {
        T c = ring.zero();
        for (std::size_t k = 0; k < i; ++k) c = ring.add(c, f[i]);
        df[i - 1] = c;
    }
    T res = resultant(ring, f, df);
    return ((n * (n - 1) / 2) % 2 == 0) ? res : ring.neg(res);
}

}  // namespace vdw
