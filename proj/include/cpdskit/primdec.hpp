#pragma once

#include <optional>
#include <vector>

#include "cpdskit/factor.hpp"
#include "cpdskit/ideal_ops.hpp"

namespace cpdskit {

struct PrimdecOptions {
  FactorOptions factor;
  unsigned candidate_budget = 64;
  unsigned max_depth = 64;
};

struct PrimaryComponent {
  Ideal primary;
  Ideal prime;  // its radical
};

// Minimal polynomial of g modulo I over the field K(U).
struct MinimalPolynomial {
  Polynomial of;
  RingPtr ring;     // ring of I extended by a fresh variable t
  std::size_t t = 0;
  Polynomial poly;  // in K[U][t], primitive with positive leading coefficient
};

// I must be zero-dimensional over K(U) (U = empty: over Q) and meet K[U]
// only in zero. The polynomial comes from linear algebra on normal forms of
// powers of g: over Q when U is empty, fraction-free over K[U] otherwise.
MinimalPolynomial minimal_polynomial(const Polynomial& g, const Ideal& I,
                                     const std::vector<std::size_t>& U);
// Elimination of the remaining variables from I + <t - g>, for any U. Kept
// as an independent cross-check of the linear-algebra routes.
MinimalPolynomial minimal_polynomial_elim(const Polynomial& g, const Ideal& I,
                                          const std::vector<std::size_t>& U);
// Linear-algebra route, U empty.
MinimalPolynomial minimal_polynomial_linear(const Polynomial& g, const Ideal& I);
// Linear-algebra route over K(U): normal forms under a Y >> U elimination
// order with pseudo-division, and fraction-free elimination over K[U].
MinimalPolynomial minimal_polynomial_fraction_free(const Polynomial& g, const Ideal& I,
                                                   const std::vector<std::size_t>& U);

struct GenericPosition {
  Polynomial element;
  MinimalPolynomial minpoly;
  std::size_t radical_dimension = 0;  // dim over K(U) of the quotient by the radical
  Ideal radical;  // generates the radical of the extension of I to K(U)
};

// Candidates in fixed order: single variables of the complement of U in
// reverse index order, then y_k + c*y_{k-1} + c^2*y_{k-2} + ... with
// c = 1, -1, 2, -2, ...
GenericPosition generic_position_search(const Ideal& I,
                                        const std::vector<std::size_t>& U,
                                        const PrimdecOptions& options = {});

enum class Want { prime, primary };

// Decomposition of the extension of I to K(U)[rest], contracted back.
std::vector<PrimaryComponent> zerodim_decompose(const Ideal& I,
                                                const std::vector<std::size_t>& U,
                                                Want want,
                                                const PrimdecOptions& options = {});

// Minimal primary decomposition over Q, all indeterminates treated alike.
std::vector<PrimaryComponent> primary_decompose(const Ideal& I,
                                                const PrimdecOptions& options = {});

// Minimal associated primes.
std::vector<Ideal> minimal_primes(const Ideal& I, const PrimdecOptions& options = {});

Ideal radical(const Ideal& I, const PrimdecOptions& options = {});

enum class Primality { prime, primary, neither };
const char* to_string(Primality p);

Primality is_primary(const Ideal& Q, const PrimdecOptions& options = {});

// Merges components with equal radicals, then drops redundant ones.
std::vector<PrimaryComponent> minimality_cleanup(std::vector<PrimaryComponent> comps);

// Checks (M-1) and (M-2) directly.
bool is_irredundant(const std::vector<PrimaryComponent>& comps);

Ideal equidimensional_hull(const Ideal& I, const PrimdecOptions& options = {});

// Krull dimension of an ideal (via its maximal independent set).
int dimension(const Ideal& I);

}  // namespace cpdskit
