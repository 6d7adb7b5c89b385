#include "cpdskit/groebner.hpp"

#include <algorithm>

#include "cpdskit/errors.hpp"
#include "cpdskit/factor.hpp"

namespace cpdskit {

namespace {

struct ITerm {
  Integer c;
  Monomial m;
};
using IPoly = std::vector<ITerm>;

// Scales a rational polynomial to a primitive integer one with positive
// leading coefficient; returns the scale s with s * f = result.
IPoly to_integer(const Polynomial& f, Rational* scale = nullptr) {
  auto [g, s] = primitive_normalize_with_scale(f);
  IPoly out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) out.push_back({t.coef.get_num(), t.mono});
  if (scale) *scale = s;
  return out;
}

Polynomial to_rational(const RingPtr& ring, const IPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({Rational(t.c), t.m});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

Integer content_of(const IPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the content and makes the leading coefficient positive.
void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = content_of(p);
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

class Reducer {
 public:
  explicit Reducer(const MonomialOrder& order) : order_(order) {}

  // f <- a*f - b*q*g, where the terms of f before index `from` are only
  // scaled (they are greater than every term of q*g). The term at `from`
  // cancels.
  void combine(IPoly& f, std::size_t from, const Integer& a, const Integer& b,
               const Monomial& q, const IPoly& g) const {
    IPoly out;
    out.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) {
      out.push_back({f[i].c * a, f[i].m});
    }
    std::size_t i = from + 1, j = 1;
    Integer tmp;
    while (i < f.size() || j < g.size()) {
      if (j >= g.size()) {
        out.push_back({f[i].c * a, f[i].m});
        ++i;
        continue;
      }
      Monomial gm = g[j].m * q;
      if (i >= f.size()) {
        out.push_back({-(b * g[j].c), gm});
        ++j;
        continue;
      }
      int c = order_.compare(f[i].m, gm);
      if (c > 0) {
        out.push_back({f[i].c * a, f[i].m});
        ++i;
      } else if (c < 0) {
        out.push_back({-(b * g[j].c), gm});
        ++j;
      } else {
        tmp = f[i].c * a - b * g[j].c;
        if (tmp != 0) out.push_back({tmp, gm});
        ++i;
        ++j;
      }
    }
    f = std::move(out);
  }

  // Fully reduces f by the basis elements selected by `active`. The scalar
  // mu satisfies mu * f_in == f_out modulo the basis when tracked.
  void reduce(IPoly& f, const std::vector<IPoly>& basis,
              const std::vector<std::size_t>& active, bool tail,
              Rational* mu) const {
    std::size_t pos = 0;
    unsigned steps = 0;
    Integer d, a, b;
    while (pos < f.size()) {
      const ITerm& t = f[pos];
      const IPoly* divisor = nullptr;
      for (auto k : active) {
        const IPoly& g = basis[k];
        if (g.front().m.divides(t.m)) {
          divisor = &g;
          break;
        }
      }
      if (!divisor) {
        if (!tail) return;
        ++pos;
        continue;
      }
      const IPoly& g = *divisor;
      Monomial q = g.front().m.quotient_of(t.m);
      mpz_gcd(d.get_mpz_t(), t.c.get_mpz_t(), g.front().c.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), g.front().c.get_mpz_t(), d.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      combine(f, pos, a, b, q, g);
      if (mu && a != 1) *mu *= a;
      if (++steps % 8 == 0 && !f.empty()) {
        Integer g2 = content_of(f);
        if (g2 != 1 && g2 != 0) {
          for (auto& term : f) {
            mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g2.get_mpz_t());
          }
          if (mu) *mu /= g2;
        }
      }
    }
  }

 private:
  const MonomialOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  explicit Engine(const RingPtr& ring)
      : ring_(ring), order_(ring->order()), reducer_(order_) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    std::vector<IPoly> input;
    for (const auto& g : gens) {
      if (!g.is_zero()) input.push_back(to_integer(g));
    }
    // Process smaller generators first; it keeps intermediate bases lean.
    std::stable_sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
      return order_.compare(a.front().m, b.front().m) < 0;
    });
    for (auto& p : input) {
      reducer_.reduce(p, basis_, active_, true, nullptr);
      make_primitive(p);
      if (p.empty()) continue;
      if (p.front().m.is_one()) return unit();
      add(std::move(p));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0) best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      IPoly s = spoly(p);
      reducer_.reduce(s, basis_, active_, true, nullptr);
      make_primitive(s);
      if (s.empty()) continue;
      if (s.front().m.is_one()) return unit();
      add(std::move(s));
    }
    return finish();
  }

 private:
  GroebnerBasis unit() {
    return {ring_, {Polynomial::constant(ring_, 1)}};
  }

  IPoly spoly(const Pair& p) const {
    const IPoly& f = basis_[p.i];
    const IPoly& g = basis_[p.j];
    Monomial qf = f.front().m.quotient_of(p.lcm);
    Monomial qg = g.front().m.quotient_of(p.lcm);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / d, b = f.front().c / d;
    // s = a*qf*f - b*qg*g, dropping the cancelling leading terms.
    IPoly lhs;
    lhs.reserve(f.size());
    for (const auto& t : f) lhs.push_back({t.c, t.m * qf});
    reducer_.combine(lhs, 0, a, b, qg, g);
    return lhs;
  }

  // Gebauer-Moeller update with the new element h.
  void add(IPoly h) {
    std::size_t hi = basis_.size();
    const Monomial hm = h.front().m;
    basis_.push_back(std::move(h));

    std::vector<Pair> candidates;
    for (auto g : active_) {
      candidates.push_back({g, hi, basis_[g].front().m.lcm(hm)});
    }
    // Keep a candidate if its leading monomials are coprime, or no other
    // candidate has an lcm properly dividing its lcm.
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      bool coprime = basis_[c.i].front().m.coprime(hm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t l = 0; l < candidates.size() && !dominated; ++l) {
          if (l == k) continue;
          const Monomial& other = candidates[l].lcm;
          if (!other.divides(c.lcm)) continue;
          // Equal lcms: keep the first of the group only.
          if (other == c.lcm) {
            dominated = l < k;
          } else {
            dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(c);
    }
    // Among kept, an equal-lcm group containing a coprime pair is dropped
    // entirely (product criterion); coprime pairs are never added.
    std::vector<Pair> fresh;
    for (const auto& c : kept) {
      if (basis_[c.i].front().m.coprime(hm)) continue;
      bool group_has_coprime = false;
      for (const auto& c2 : candidates) {
        if (c2.lcm == c.lcm && basis_[c2.i].front().m.coprime(hm)) {
          group_has_coprime = true;
          break;
        }
      }
      if (!group_has_coprime) fresh.push_back(c);
    }
    // Chain criterion on the old pairs.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = hm.divides(p.lcm) &&
                  basis_[p.i].front().m.lcm(hm) != p.lcm &&
                  basis_[p.j].front().m.lcm(hm) != p.lcm;
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    for (auto& f : fresh) pairs_.push_back(f);

    std::vector<std::size_t> next;
    for (auto g : active_) {
      if (!hm.divides(basis_[g].front().m)) next.push_back(g);
    }
    next.push_back(hi);
    active_ = std::move(next);
  }

  GroebnerBasis finish() {
    std::vector<IPoly> result;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t l = 0; l < active_.size(); ++l) {
        if (l != k) others.push_back(active_[l]);
      }
      // Leading terms are mutually non-divisible, so only tails reduce.
      result.push_back(reduce_tail(basis_[active_[k]], others));
    }
    std::sort(result.begin(), result.end(), [&](const IPoly& a, const IPoly& b) {
      return order_.compare(a.front().m, b.front().m) < 0;
    });
    GroebnerBasis gb{ring_, {}};
    for (auto& p : result) gb.elements.push_back(to_rational(ring_, p));
    return gb;
  }

  IPoly reduce_tail(IPoly p, const std::vector<std::size_t>& others) const {
    // Reduce every non-leading term; the leading term is irreducible.
    std::size_t pos = 1;
    Integer d, a, b;
    while (pos < p.size()) {
      const ITerm& t = p[pos];
      const IPoly* divisor = nullptr;
      for (auto k : others) {
        if (basis_[k].front().m.divides(t.m)) {
          divisor = &basis_[k];
          break;
        }
      }
      if (!divisor) {
        ++pos;
        continue;
      }
      const IPoly& g = *divisor;
      Monomial q = g.front().m.quotient_of(t.m);
      mpz_gcd(d.get_mpz_t(), t.c.get_mpz_t(), g.front().c.get_mpz_t());
      a = g.front().c / d;
      b = t.c / d;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      reducer_.combine(p, pos, a, b, q, g);
    }
    make_primitive(p);
    return p;
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  Reducer reducer_;
  std::vector<IPoly> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (!(a.elements[i] == b.elements[i])) return false;
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("buchberger needs a ring; pass it explicitly");
  return buchberger(gens.front().ring(), gens);
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> mapped;
  mapped.reserve(gens.size());
  for (const auto& g : gens) {
    mapped.push_back(same_ring(g.ring(), ring) && g.ring() == ring ? g : g.map_to(ring));
  }
  return Engine(ring).run(mapped);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  Polynomial g = f.ring() == G.ring ? f : f.map_to(G.ring);
  if (g.is_zero()) return g;
  if (G.is_unit()) return Polynomial(G.ring);
  std::vector<IPoly> basis;
  std::vector<std::size_t> active;
  for (const auto& e : G.elements) {
    active.push_back(basis.size());
    basis.push_back(to_integer(e));
  }
  Rational scale;
  IPoly p = to_integer(g, &scale);
  Rational mu = 1;
  Reducer(G.ring->order()).reduce(p, basis, active, true, &mu);
  // mu * (scale * g) == p, so NF(g) = p / (mu * scale).
  return to_rational(G.ring, p) * (1 / (mu * scale));
}

bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

bool s_polynomials_reduce(const GroebnerBasis& G) {
  const auto& el = G.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const auto& fi = el[i];
      const auto& fj = el[j];
      Monomial l = fi.leading_monomial().lcm(fj.leading_monomial());
      Polynomial s =
          fi.mul_term(1 / fi.leading_coefficient(), fi.leading_monomial().quotient_of(l)) -
          fj.mul_term(1 / fj.leading_coefficient(), fj.leading_monomial().quotient_of(l));
      if (!reduces_to_zero(s, G)) return false;
    }
  }
  return true;
}

MonomialOrder elimination_order(const Ring& ring,
                                const std::vector<std::size_t>& eliminate,
                                BlockKind kind) {
  std::vector<bool> elim(ring.size(), false);
  for (auto v : eliminate) elim[v] = true;
  OrderBlock first{{}, kind}, second{{}, kind};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    (elim[i] ? first : second).vars.push_back(i);
  }
  std::vector<OrderBlock> blocks;
  if (!first.vars.empty()) blocks.push_back(first);
  if (!second.vars.empty()) blocks.push_back(second);
  return MonomialOrder(std::move(blocks), ring.size());
}

std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& gens,
                                          const std::vector<std::size_t>& keep) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  std::vector<bool> kept(ring->size(), false);
  for (auto v : keep) kept[v] = true;
  std::vector<std::size_t> elim;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (!kept[i]) elim.push_back(i);
  }
  RingPtr er = ring->with_order(elimination_order(*ring, elim));
  auto gb = buchberger(er, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    if (g.uses_only(kept)) out.push_back(g.map_to(ring));
  }
  return out;
}

StabilityTrace::StabilityTrace(RingPtr ring, const std::vector<Polynomial>& base)
    : ring_(std::move(ring)) {
  std::vector<Polynomial> mapped;
  for (const auto& b : base) mapped.push_back(b.map_to(ring_));
  for (const auto& b : mapped) {
    for (auto v : b.support()) {
      if (!ring_->is_parameter(v)) {
        throw PreconditionError("stratum ideal must lie in the parameter ring");
      }
    }
  }
  base_ = buchberger(ring_, mapped);
}

Polynomial StabilityTrace::reduce(const Polynomial& f) const {
  Polynomial g = f.ring() == ring_ ? f : f.map_to(ring_);
  if (base_.is_zero()) return g;
  return normal_form(g, base_);
}

bool StabilityTrace::require_nonzero(const Polynomial& f) {
  Polynomial r = reduce(f);
  if (r.is_zero()) return false;
  if (r.is_constant()) return true;
  Polynomial s = primitive_normalize(squarefree_part(r));
  for (const auto& existing : factors_) {
    if (existing == s) return true;
  }
  factors_.push_back(std::move(s));
  return true;
}

void StabilityTrace::absorb(const StabilityTrace& other) {
  for (const auto& f : other.factors_) require_nonzero(f);
}

std::vector<Polynomial> StabilityTrace::finalize() const {
  Polynomial prod = Polynomial::constant(ring_, 1);
  for (const auto& f : factors_) prod *= f;
  std::vector<Polynomial> out{prod};
  for (const auto& b : base_.elements) out.push_back(b);
  return out;
}

TracedBasis traced_buchberger(const std::vector<Polynomial>& gens,
                              const StabilityTrace& stratum) {
  const RingPtr& ring = stratum.ring();
  std::vector<Polynomial> all;
  for (const auto& g : gens) all.push_back(g.map_to(ring));
  for (const auto& b : stratum.base().elements) all.push_back(b);
  TracedBasis out;
  out.basis = buchberger(ring, all);
  out.trace = stratum;
  std::vector<bool> params(ring->size(), false);
  for (auto v : ring->parameter_indices()) params[v] = true;
  for (const auto& g : out.basis.elements) {
    if (g.uses_only(params)) {
      if (!stratum.reduce(g).is_zero()) out.new_conditions.push_back(g);
    }
  }
  if (!out.new_conditions.empty()) {
    out.status = TraceStatus::split_needed;
    return out;
  }
  for (const auto& g : out.basis.elements) {
    if (g.uses_only(params)) continue;
    if (!out.trace.require_nonzero(leading_data(g).lc)) {
      // Cannot happen for a reduced basis over a prime stratum; report it as a
      // required split so callers refine the stratum.
      out.status = TraceStatus::split_needed;
      out.new_conditions.push_back(leading_data(g).lc);
    }
  }
  return out;
}

PseudoReduction pseudo_normal_form(const Polynomial& f, const GroebnerBasis& G,
                                   StabilityTrace& stratum) {
  const RingPtr& ring = G.ring;
  Polynomial p = stratum.reduce(f.map_to(ring));
  Polynomial mult = Polynomial::constant(ring, 1);
  std::vector<bool> params(ring->size(), false);
  for (auto v : ring->parameter_indices()) params[v] = true;
  std::vector<std::pair<LeadingData, const Polynomial*>> divisors;
  for (const auto& g : G.elements) {
    if (!g.uses_only(params)) divisors.push_back({leading_data(g), &g});
  }
  while (!p.is_zero()) {
    auto coeffs = coefficients_over_parameters(p);
    // Highest X-monomial divisible by some leading monomial.
    bool reduced = false;
    for (const auto& [xm, coeff] : coeffs) {
      for (const auto& [ld, g] : divisors) {
        if (!ld.lm.divides(xm)) continue;
        Monomial q = ld.lm.quotient_of(xm);
        if (auto exact = divide_exact(coeff, ld.lc)) {
          // lc(g) divides the coefficient: plain reduction, no new condition.
          p = stratum.reduce(p - (*exact * g->mul_term(1, q)));
        } else {
          // lc(g) * p - coeff * q * g cancels the xm coefficient.
          p = ld.lc * p - (coeff * g->mul_term(1, q));
          p = stratum.reduce(p);
          mult = ld.lc * mult;
          stratum.require_nonzero(ld.lc);
        }
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) break;
  }
  return {p, stratum.reduce(mult)};
}

}  // namespace cpdskit
