#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpdskit/polynomial.hpp"

namespace cpdskit {

struct Factorization {
  Rational unit = 1;
  // Factor free of the main variable when factoring over Q(U); 1 otherwise.
  std::optional<Polynomial> content;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  // unit * content * prod f^e.
  Polynomial expand(const RingPtr& ring) const;
  std::size_t count() const { return factors.size(); }
};

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Pseudo-remainder of f by g as polynomials in var.
Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g,
                            std::size_t var);

// Greatest common divisor, primitive with positive leading coefficient.
Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

// gcd of the coefficients of f viewed in K[others][var].
Polynomial content_in(const Polynomial& f, std::size_t var);

// Product of the distinct irreducible factors, primitive.
Polynomial squarefree_part(const Polynomial& f);

// Yun decomposition in main, over the fraction field of the other
// variables. Parts are primitive in main; the remaining content is stored.
Factorization squarefree_decompose(const Polynomial& f, std::size_t main);

// Irreducible factorization over Q of a polynomial in one variable.
Factorization factor_univariate_Q(const Polynomial& f);

struct FactorOptions {
  unsigned max_kronecker = 64;
};

// Irreducible factorization over Q of a multivariate polynomial.
Factorization factor_multivariate(const Polynomial& f,
                                  const FactorOptions& options = {});

// Irreducible factorization over Q(U) of f in Q[U][main]; other variables
// must not occur. Factors have positive degree in main.
Factorization factor_over_function_field(const Polynomial& f, std::size_t main,
                                         const std::vector<std::size_t>& U,
                                         const FactorOptions& options = {});

bool is_irreducible(const Polynomial& f, std::size_t main,
                    const std::vector<std::size_t>& U,
                    const FactorOptions& options = {});

}  // namespace cpdskit
