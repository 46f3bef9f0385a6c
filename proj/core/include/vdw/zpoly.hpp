#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vdw/bigint.hpp"

namespace vdw {

/// Dense integer polynomial, coefficients low to high. The zero polynomial is
/// the empty vector.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly zmul(const ZPoly& f, const ZPoly& g);
ZPoly zadd(const ZPoly& f, const ZPoly& g);
ZPoly zsub(const ZPoly& f, const ZPoly& g);
ZPoly zderivative(const ZPoly& f);
BigInt zeval(const ZPoly& f, const BigInt& x);

/// Quotient and remainder by a monic divisor.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& f, const ZPoly& g);

/// Discriminant of a monic polynomial via the Sylvester resultant.
BigInt zdisc_monic(const ZPoly& f);

/// True if the monic polynomial f factors over Q. Candidates come from
/// products of numerically computed roots and are confirmed by exact division.
bool zis_reducible_monic(const ZPoly& f);

std::string zto_string(const ZPoly& f, const std::string& var = "X");

}  // namespace vdw
