#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vdw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

inline bool fits_i64(const BigInt& v) {
    return v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
           v <= BigInt(std::numeric_limits<std::int64_t>::max());
}

/// "p/q" (or "p" when q = 1).
inline std::string rational_str(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

/// floor(sqrt(v)) for v >= 0.
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt s = isqrt(v);
    return s * s == v;
}

}  // namespace vdw
