#pragma once

#include <cstdint>
#include <vector>

#include "cpdskit/rational.hpp"

namespace cpdskit {

// Dense univariate integer polynomial, coefficient of x^i at index i, no
// trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
// Exact quotient a / b over Z, or false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

// Irreducible factors over Z of a primitive squarefree polynomial with
// positive leading coefficient (Zassenhaus: factor modulo a small prime,
// Hensel lift, recombine by exact trial division).
std::vector<ZPoly> zassenhaus(const ZPoly& f);

}  // namespace cpdskit
