#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpdskit/monomial.hpp"
#include "cpdskit/rational.hpp"
#include "cpdskit/ring.hpp"

namespace cpdskit {

struct Term {
  Rational coef;
  Monomial mono;
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted
// strictly descending in the ring's order with no zero coefficients, so the
// representation is canonical per ring.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Rational& c,
                             const Monomial& m);
  // Sorts and merges arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts that terms are already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::optional<Rational> constant_value() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  // True when every term lies in K[vars] for the variables set in mask.
  bool uses_only(const std::vector<bool>& mask) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<std::size_t> support() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  // Exact equality; ring must agree.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Re-expresses the polynomial in target by variable name; terms re-sorted.
  Polynomial map_to(const RingPtr& target) const;

  // Replaces variable var by value.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Assignment of rational values to parameter names.
using Point = std::map<std::string, Rational>;

std::string to_string(const Point& point);

// f(alpha, X) as a polynomial of ring->parameter_free(); every parameter must
// be assigned.
Polynomial specialize(const Polynomial& f, const Point& alpha);

// Substitutes values for the named variables (any role) and keeps the ring.
Polynomial evaluate_partial(const Polynomial& f,
                            const std::map<std::size_t, Rational>& values);

// Full evaluation of a polynomial whose support is covered by values.
Rational evaluate(const Polynomial& f,
                  const std::map<std::size_t, Rational>& values);

struct LeadingData {
  Polynomial lc;  // in K[A]
  Monomial lm;    // over the non-parameter block
  Polynomial lt;  // lc * lm
};

// Leading data of f viewed in K[A][X, T] under the restriction of the ring
// order to the non-parameter indeterminates.
LeadingData leading_data(const Polynomial& f);

// Coefficients of f in K[A][X, T]: non-parameter monomial -> K[A] part,
// ordered descending in the restricted order.
std::vector<std::pair<Monomial, Polynomial>> coefficients_over_parameters(
    const Polynomial& f);

// Coefficients of f as polynomial in a single variable (degree -> coeff).
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var);

// Positive rational multiple with coprime integer coefficients and positive
// leading coefficient.
Polynomial primitive_normalize(const Polynomial& f);

// Same as primitive_normalize but also returns the multiplier used.
std::pair<Polynomial, Rational> primitive_normalize_with_scale(
    const Polynomial& f);

// Gcd of the numerators over lcm of denominators; sign follows leading term.
Rational content(const Polynomial& f);

Polynomial derivative(const Polynomial& f, std::size_t var);
Polynomial derivative(const Polynomial& f, const std::string& var);

}  // namespace cpdskit
