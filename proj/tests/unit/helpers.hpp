#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vdw/ofield.hpp"

namespace vdw::test {

/// Coefficients α_0..α_{n-1}; the leading one is implicit.
inline BigOPoly big_poly(const NumberField& K, const std::string& json) {
    return parse_poly(K, json, static_cast<int>(nlohmann::json::parse(json).size()));
}

inline OPoly small_poly(const NumberField& K, const std::string& json) {
    const BigOPoly big = big_poly(K, json);
    OPoly f;
    for (const auto& a : big.a) f.a.push_back(to_small(a));
    return f;
}

inline OElem elem(const NumberField& K, std::initializer_list<std::int64_t> coords) {
    OElem a;
    int i = 0;
    for (auto c : coords) a.c[i++] = c;
    (void)K;
    return a;
}

}  // namespace vdw::test
