#include "cpdskit/ideal_ops.hpp"

#include <algorithm>
#include <functional>

#include "cpdskit/errors.hpp"
#include "cpdskit/factor.hpp"

namespace cpdskit {

Ideal sum(const Ideal& a, const Ideal& b) {
  return sum(a, b.generators());
}

Ideal sum(const Ideal& a, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : extra) gens.push_back(g.map_to(a.ring()));
  return Ideal(a.ring(), gens);
}

Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g.map_to(a.ring()));
  }
  return Ideal(a.ring(), gens);
}

RingPtr prepend_variables(const RingPtr& base, const std::vector<std::string>& names,
                          VarRole role, std::optional<BlockKind> rest) {
  std::vector<std::string> all = names;
  std::vector<VarRole> roles(names.size(), role);
  for (std::size_t i = 0; i < base->size(); ++i) {
    all.push_back(base->name(i));
    roles.push_back(base->role(i));
  }
  std::size_t k = names.size();
  std::vector<OrderBlock> blocks;
  OrderBlock first{{}, BlockKind::lex};
  for (std::size_t i = 0; i < k; ++i) first.vars.push_back(i);
  if (k) blocks.push_back(first);
  if (rest) {
    OrderBlock b{{}, *rest};
    for (std::size_t i = 0; i < base->size(); ++i) b.vars.push_back(i + k);
    if (!b.vars.empty()) blocks.push_back(b);
  } else {
    for (const auto& ob : base->order().blocks()) {
      OrderBlock b{{}, ob.kind};
      for (auto v : ob.vars) b.vars.push_back(v + k);
      blocks.push_back(b);
    }
  }
  std::size_t n = all.size();
  return Ring::make_custom(std::move(all), std::move(roles),
                           MonomialOrder(std::move(blocks), n));
}

namespace {

// Generators of the elimination ideal of gens (in ring r, whose first k
// indeterminates form an eliminating block) mapped to target.
Ideal eliminate_leading(const RingPtr& r, std::size_t k,
                        const std::vector<Polynomial>& gens, const RingPtr& target) {
  auto gb = buchberger(r, gens);
  std::vector<bool> keep(r->size(), true);
  for (std::size_t i = 0; i < k; ++i) keep[i] = false;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    if (g.uses_only(keep)) out.push_back(g.map_to(target));
  }
  return Ideal(target, out);
}

std::string fresh(const Ring& r, const std::string& base, std::size_t i) {
  return r.fresh_name(base + std::to_string(i));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
  const RingPtr& ring = I.ring();
  RingPtr er = ring->with_order(elimination_order(*ring, vars));
  auto gb = buchberger(er, I.generators());
  std::vector<bool> keep(ring->size(), true);
  for (auto v : vars) keep[v] = false;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    if (g.uses_only(keep)) out.push_back(g.map_to(ring));
  }
  return Ideal(ring, out);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of no ideals");
  const RingPtr& ring = ideals.front().ring();
  std::vector<Ideal> parts;
  for (const auto& I : ideals) {
    if (I.is_zero()) return Ideal::zero(ring);
    if (I.is_unit()) continue;
    parts.push_back(I.map_to(ring));
  }
  if (parts.empty()) return Ideal::unit(ring);
  if (parts.size() == 1) return parts.front();
  std::size_t k = parts.size() - 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(fresh(*ring, "t_", i + 1));
  RingPtr r = prepend_variables(ring, names, VarRole::slack);
  std::vector<Polynomial> gens;
  Polynomial last = Polynomial::constant(r, 1);
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial t = Polynomial::variable(r, i);
    last -= t;
    for (const auto& g : parts[i].generators()) gens.push_back(t * g.map_to(r));
  }
  for (const auto& g : parts.back().generators()) gens.push_back(last * g.map_to(r));
  return eliminate_leading(r, k, gens, ring);
}

Ideal intersect(const Ideal& a, const Ideal& b) { return intersect({a, b}); }

Ideal quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring());
  Ideal F(I.ring(), {f});
  Ideal both = intersect(I, F);
  std::vector<Polynomial> gens;
  for (const auto& g : both.generators()) {
    auto q = divide_exact(g, f.map_to(I.ring()));
    if (!q) throw InternalError("intersection element not divisible in quotient");
    gens.push_back(*q);
  }
  return Ideal(I.ring(), gens);
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  std::vector<Ideal> parts;
  for (const auto& f : J.generators()) parts.push_back(quotient(I, f));
  if (parts.empty()) return Ideal::unit(I.ring());
  return intersect(parts);
}

Saturation saturate(const Ideal& I, const Polynomial& f, unsigned cap) {
  const RingPtr& ring = I.ring();
  Polynomial g = f.map_to(ring);
  if (g.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  if (g.is_constant()) return {I, 0};
  RingPtr r = prepend_variables(ring, {ring->fresh_name("y_")}, VarRole::slack);
  std::vector<Polynomial> gens;
  for (const auto& h : I.generators()) gens.push_back(h.map_to(r));
  gens.push_back(Polynomial::constant(r, 1) - Polynomial::variable(r, 0) * g.map_to(r));
  Ideal sat = eliminate_leading(r, 1, gens, ring).canonical();
  // Least s with f^s * sat inside I.
  const auto& gbI = I.groebner();
  unsigned s = 0;
  for (const auto& h : sat.groebner().elements) {
    Polynomial cur = h;
    unsigned k = 0;
    while (!reduces_to_zero(cur, gbI)) {
      if (++k > cap) throw ResourceLimit("saturation exponent exceeds cap " + std::to_string(cap));
      cur = normal_form(cur * g, gbI);
    }
    s = std::max(s, k);
  }
  return {sat, s};
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  std::vector<Ideal> parts;
  for (const auto& f : J.generators()) parts.push_back(saturate(I, f).ideal);
  if (parts.empty()) return I;
  if (parts.size() == 1) return parts.front();
  return intersect(parts);
}

Ideal condition_ideal(const Ideal& I) {
  const RingPtr& ring = I.ring();
  std::vector<std::size_t> elim = ring->non_parameter_indices();
  if (elim.empty()) return I;
  // The ring order already puts parameters last; reuse the cached basis.
  std::vector<bool> params(ring->size(), false);
  for (auto v : ring->parameter_indices()) params[v] = true;
  bool block = true;
  const auto& blocks = ring->order().blocks();
  bool seen_param = false;
  for (const auto& b : blocks) {
    bool any_param = false, any_other = false;
    for (auto v : b.vars) (params[v] ? any_param : any_other) = true;
    if (any_param && any_other) block = false;
    if (any_other && seen_param) block = false;
    if (any_param) seen_param = true;
  }
  if (!block) return eliminate(I, elim);
  std::vector<Polynomial> out;
  for (const auto& g : I.groebner().elements) {
    if (g.uses_only(params)) out.push_back(g);
  }
  return Ideal(ring, out);
}

bool radical_contains(const Ideal& I, const Polynomial& f) {
  const RingPtr& ring = I.ring();
  Polynomial g = f.map_to(ring);
  if (g.is_zero()) return true;
  if (I.contains(g)) return true;
  RingPtr r = prepend_variables(ring, {ring->fresh_name("y_")}, VarRole::slack);
  std::vector<Polynomial> gens;
  for (const auto& h : I.generators()) gens.push_back(h.map_to(r));
  gens.push_back(Polynomial::constant(r, 1) - Polynomial::variable(r, 0) * g.map_to(r));
  std::vector<std::size_t> all(r->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  RingPtr flat = r->with_order(MonomialOrder({{all, BlockKind::grevlex}}, r->size()));
  return buchberger(flat, gens).is_unit();
}

bool is_independent(const std::vector<Monomial>& leading,
                    const std::vector<std::size_t>& subset) {
  for (const auto& m : leading) {
    bool inside = true;
    for (std::size_t i = 0; i < kMaxVars && inside; ++i) {
      if (m[i] && std::find(subset.begin(), subset.end(), i) == subset.end()) inside = false;
    }
    if (inside) return false;
  }
  return true;
}

DimensionInfo dimension_and_mis(const std::vector<Monomial>& leading,
                                const std::vector<std::size_t>& candidates) {
  std::size_t n = candidates.size();
  for (std::size_t size = n + 1; size-- > 0;) {
    // Subsets of the given size in lexicographic order of positions.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> subset;
      for (auto i : idx) subset.push_back(candidates[i]);
      if (is_independent(leading, subset)) {
        std::sort(subset.begin(), subset.end());
        return {static_cast<int>(size), subset};
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {-1, {}};
}

DimensionInfo dimension_and_mis(const Ideal& I) {
  const auto& gb = I.groebner();
  if (gb.is_unit()) throw PreconditionError("the unit ideal has no dimension");
  std::vector<std::size_t> all(I.ring()->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return dimension_and_mis(gb.leading_monomials(), all);
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading,
                                         const std::vector<std::size_t>& vars) {
  std::vector<Monomial> relevant;
  for (const auto& m : leading) {
    bool inside = true;
    for (std::size_t i = 0; i < kMaxVars && inside; ++i) {
      if (m[i] && std::find(vars.begin(), vars.end(), i) == vars.end()) inside = false;
    }
    if (inside) relevant.push_back(m);
  }
  for (const auto& m : relevant) {
    if (m.is_one()) return {};
  }
  std::vector<unsigned> cap(vars.size(), 0);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    for (const auto& m : relevant) {
      if (m.degree() == m[vars[j]] && m[vars[j]] > 0) {
        cap[j] = cap[j] == 0 ? m[vars[j]] : std::min<unsigned>(cap[j], m[vars[j]]);
      }
    }
    if (cap[j] == 0) throw PreconditionError("ideal is not zero-dimensional");
  }
  std::vector<Monomial> out;
  std::function<void(std::size_t, Monomial)> rec = [&](std::size_t j, Monomial m) {
    for (const auto& l : relevant) {
      if (l.divides(m)) return;
    }
    if (j == vars.size()) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e < cap[j]; ++e) {
      Monomial next = m;
      next.set(vars[j], e);
      bool blocked = false;
      for (const auto& l : relevant) {
        if (l.divides(next)) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
      rec(j + 1, next);
    }
  };
  rec(0, Monomial());
  return out;
}

std::vector<Monomial> quotient_basis(const Ideal& I) {
  std::vector<std::size_t> all(I.ring()->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto& gb = I.groebner();
  if (gb.is_unit()) return {};
  return standard_monomials(gb.leading_monomials(), all);
}

Polynomial leading_coefficient_in(const Polynomial& f, const std::vector<bool>& in_u) {
  const Monomial& lm = f.leading_monomial();
  Monomial ypart;
  for (std::size_t i = 0; i < f.ring()->size(); ++i) {
    if (!in_u[i] && lm[i]) ypart.set(i, lm[i]);
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    bool match = true;
    Monomial upart;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
      if (in_u[i]) {
        if (t.mono[i]) upart.set(i, t.mono[i]);
      } else if (t.mono[i] != ypart[i]) {
        match = false;
        break;
      }
    }
    if (match) terms.push_back({t.coef, upart});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Contraction contraction(const Ideal& I, const std::vector<std::size_t>& U) {
  const RingPtr& ring = I.ring();
  std::vector<bool> in_u(ring->size(), false);
  for (auto v : U) in_u[v] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (!in_u[i]) rest.push_back(i);
  }
  RingPtr br = ring->with_order(elimination_order(*ring, rest));
  auto gb = buchberger(br, I.generators());
  for (const auto& g : gb.elements) {
    if (g.uses_only(in_u)) throw PreconditionError("set is not independent for the ideal");
  }
  std::vector<Polynomial> factors;
  for (const auto& g : gb.elements) {
    Polynomial lc = leading_coefficient_in(g, in_u);
    if (lc.is_constant()) continue;
    Polynomial s = squarefree_part(lc.map_to(ring));
    // Keep distinct irreducible content: split against existing factors.
    bool dup = false;
    for (const auto& f : factors) {
      if (f == s) dup = true;
    }
    if (!dup) factors.push_back(s);
  }
  Polynomial h = Polynomial::constant(ring, 1);
  for (const auto& f : factors) h *= f;
  h = squarefree_part(h);
  if (h.is_constant()) return {I, Polynomial::constant(ring, 1), 0};
  auto sat = saturate(I, h);
  return {sat.ideal, h, sat.exponent};
}

std::optional<Polynomial> inclusion_test(const Ideal& a, const Ideal& b) {
  const auto& gb = b.groebner();
  if (gb.is_unit()) return std::nullopt;
  for (const auto& g : a.generators()) {
    if (!reduces_to_zero(g, gb)) return g;
  }
  return std::nullopt;
}

}  // namespace cpdskit
