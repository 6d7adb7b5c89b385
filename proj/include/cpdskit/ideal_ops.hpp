#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpdskit/ideal.hpp"

namespace cpdskit {

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const std::vector<Polynomial>& extra);

// Ring with new indeterminates placed in a leading lex block, followed by the
// base ring's indeterminates in one block of kind rest (or the base order when
// rest is empty).
RingPtr prepend_variables(const RingPtr& base,
                          const std::vector<std::string>& names, VarRole role,
                          std::optional<BlockKind> rest = BlockKind::grevlex);

// Eliminates the given indeterminates; the result lives in I's ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);

Ideal intersect(const std::vector<Ideal>& ideals);
Ideal intersect(const Ideal& a, const Ideal& b);

Ideal quotient(const Ideal& I, const Polynomial& f);
Ideal quotient(const Ideal& I, const Ideal& J);

struct Saturation {
  Ideal ideal;
  unsigned exponent = 0;
};

inline constexpr unsigned kDefaultSaturationCap = 50;

// I : f^infinity with the least s such that I : f^s equals it.
Saturation saturate(const Ideal& I, const Polynomial& f,
                    unsigned cap = kDefaultSaturationCap);
// I : J^infinity.
Ideal saturate(const Ideal& I, const Ideal& J);

// I intersected with K[A], as an ideal of I's ring.
Ideal condition_ideal(const Ideal& I);

// f lies in the radical of I (1 in I + <1 - y f>).
bool radical_contains(const Ideal& I, const Polynomial& f);

struct DimensionInfo {
  int dimension = -1;
  std::vector<std::size_t> mis;  // ring indices, ascending
};

// Independent sets read off the leading monomials of the reduced basis.
bool is_independent(const std::vector<Monomial>& leading,
                    const std::vector<std::size_t>& subset);
DimensionInfo dimension_and_mis(const Ideal& I);
DimensionInfo dimension_and_mis(const std::vector<Monomial>& leading,
                                const std::vector<std::size_t>& candidates);

// Standard monomials in vars of the monomial ideal generated by leading
// (restricted to vars). Throws when infinitely many.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading,
                                         const std::vector<std::size_t>& vars);
std::vector<Monomial> quotient_basis(const Ideal& I);

struct Contraction {
  Ideal ideal;      // I : h^infinity
  Polynomial h;     // product of distinct squarefree leading coefficients
  unsigned exponent = 0;
};

// Extension to K(U)[rest] followed by contraction.
Contraction contraction(const Ideal& I, const std::vector<std::size_t>& U);

// Coefficient in K[U] of the leading monomial of f viewed in K[U][rest],
// under order.
Polynomial leading_coefficient_in(const Polynomial& f,
                                  const std::vector<bool>& in_u);

// nullopt when a is contained in b; otherwise a generator of a outside b.
std::optional<Polynomial> inclusion_test(const Ideal& a, const Ideal& b);

}  // namespace cpdskit
