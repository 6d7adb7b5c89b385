#pragma once

#include <optional>
#include <vector>

#include "cpdskit/polynomial.hpp"

namespace cpdskit {

// Reduced Groebner basis. Elements are primitive with positive leading
// coefficient, sorted ascending by leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant();
  }
  bool is_zero() const { return elements.empty(); }
  std::vector<Monomial> leading_monomials() const;
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);
};

// Buchberger with the Gebauer-Moeller criteria and normal pair selection, in
// the order of the generators' ring.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens);

// Unique remainder of f modulo G; map f into G's ring first if needed.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& G);

// True when every S-polynomial of G reduces to zero by G.
bool s_polynomials_reduce(const GroebnerBasis& G);

// Block order placing the given variables in a first block before the rest;
// each block uses kind.
MonomialOrder elimination_order(const Ring& ring,
                                const std::vector<std::size_t>& eliminate,
                                BlockKind kind = BlockKind::grevlex);

// Generators of <gens> intersected with K[keep], expressed in the same ring
// as the input.
std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& gens,
                                          const std::vector<std::size_t>& keep);

// Nonvanishing conditions in K[A] collected during a parametric computation
// over the stratum V(base).
class StabilityTrace {
 public:
  StabilityTrace() = default;
  // base generators may live in any ring containing the parameters by name;
  // they are mapped into ring.
  StabilityTrace(RingPtr ring, const std::vector<Polynomial>& base);

  const RingPtr& ring() const { return ring_; }
  const GroebnerBasis& base() const { return base_; }
  const std::vector<Polynomial>& factors() const { return factors_; }

  // Records that f must not vanish. Returns false when f lies in the base
  // ideal, which means the stratum must be split before continuing.
  bool require_nonzero(const Polynomial& f);

  // Remainder of a K[A] polynomial modulo the base.
  Polynomial reduce(const Polynomial& f) const;

  // Adds the factors of another trace over the same base.
  void absorb(const StabilityTrace& other);

  // <product of factors> + base, in ring().
  std::vector<Polynomial> finalize() const;

 private:
  RingPtr ring_;
  GroebnerBasis base_;
  std::vector<Polynomial> factors_;
};

enum class TraceStatus { ok, split_needed };

struct TracedBasis {
  TraceStatus status = TraceStatus::ok;
  GroebnerBasis basis;
  StabilityTrace trace;
  // When split_needed: elements of the basis in K[A] that are not in the base.
  std::vector<Polynomial> new_conditions;
};

// Groebner basis of <gens> + base over the stratum. The ring of stratum (the
// ring of gens up to naming) must carry a block order with the parameters
// last. Specializing the basis at any alpha in V(base) off the trace factors
// yields a Groebner basis of the specialized ideal.
TracedBasis traced_buchberger(const std::vector<Polynomial>& gens,
                              const StabilityTrace& stratum);

struct PseudoReduction {
  Polynomial remainder;
  Polynomial multiplier;  // in K[A]
};

// Pseudo-division over K[A] by the elements of G not in K[A], with
// parameter coefficients reduced modulo stratum.base(); multipliers are the
// leading coefficients used and are appended to the trace.
PseudoReduction pseudo_normal_form(const Polynomial& f, const GroebnerBasis& G,
                                   StabilityTrace& stratum);

}  // namespace cpdskit
