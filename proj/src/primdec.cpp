#include "cpdskit/primdec.hpp"

#include <algorithm>
#include <map>

#include "cpdskit/errors.hpp"

namespace cpdskit {

namespace {

std::vector<std::size_t> complement(const Ring& ring, const std::vector<std::size_t>& U) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (std::find(U.begin(), U.end(), i) == U.end()) out.push_back(i);
  }
  return out;
}

// Base ring extended by t at the last index; blocks Y >> t >> U.
RingPtr ring_with_t(const RingPtr& base, const std::vector<std::size_t>& Y,
                    const std::vector<std::size_t>& U) {
  std::vector<std::string> names = base->names();
  std::vector<VarRole> roles = base->roles();
  std::size_t t = names.size();
  names.push_back(base->fresh_name("t"));
  roles.push_back(VarRole::variable);
  std::vector<OrderBlock> blocks;
  if (!Y.empty()) blocks.push_back({Y, BlockKind::grevlex});
  blocks.push_back({{t}, BlockKind::lex});
  if (!U.empty()) blocks.push_back({U, BlockKind::grevlex});
  std::size_t n = names.size();
  return Ring::make_custom(std::move(names), std::move(roles), MonomialOrder(std::move(blocks), n));
}

Polynomial primitive_in(const Polynomial& f, std::size_t var) {
  Polynomial c = content_in(f, var);
  return primitive_normalize(*divide_exact(f, c));
}

// m(g) in the base ring for m in K[U][t].
Polynomial evaluate_at(const MinimalPolynomial& mp, const Polynomial& m, const RingPtr& base) {
  Polynomial g = mp.of.map_to(mp.ring);
  return m.map_to(mp.ring).substitute(mp.t, g).map_to(base);
}

Monomial restrict(const Monomial& m, const std::vector<std::size_t>& vars) {
  Monomial out;
  for (auto v : vars) {
    if (m[v]) out.set(v, m[v]);
  }
  return out;
}

// K(U)-dimension of K(U)[Y]/I K(U)[Y].
std::size_t quotient_dimension(const Ideal& I, const std::vector<std::size_t>& Y) {
  const RingPtr& base = I.ring();
  RingPtr er = base->with_order(elimination_order(*base, Y));
  auto gb = buchberger(er, I.generators());
  std::vector<bool> ymask(base->size(), false);
  for (auto y : Y) ymask[y] = true;
  std::vector<Monomial> lead;
  for (const auto& g : gb.elements) {
    Monomial ym = restrict(g.leading_monomial(), Y);
    if (ym.is_one()) {
      throw PreconditionError("extension is the unit ideal over the coefficient field");
    }
    lead.push_back(ym);
  }
  return standard_monomials(lead, Y).size();
}

Polynomial squarefree_in(const Polynomial& m, std::size_t t) {
  auto sq = squarefree_decompose(m, t);
  Polynomial out = Polynomial::constant(m.ring(), 1);
  for (const auto& [p, e] : sq.factors) out *= p;
  return primitive_normalize(out);
}

// K(U)[Y] / I K(U)[Y], with elements stored as K[U]-coefficient vectors on
// the standard monomials of a basis under Y >> U.
class FunctionFieldQuotient {
 public:
  FunctionFieldQuotient(const Ideal& I, const std::vector<std::size_t>& Y)
      : Y_(Y) {
    const RingPtr& base = I.ring();
    ring_ = base->with_order(elimination_order(*base, Y));
    gb_ = buchberger(ring_, I.generators());
    std::vector<Monomial> lead;
    for (const auto& g : gb_.elements) {
      Monomial ym = restrict(g.leading_monomial(), Y_);
      if (ym.is_one()) {
        throw PreconditionError("ideal meets the coefficient ring of the extension");
      }
      lead.push_back(ym);
      divisors_.push_back({ym, y_coefficient(g, ym), &g});
    }
    basis_ = standard_monomials(lead, Y_);
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t dimension() const { return basis_.size(); }

  // Coefficients of m * NF(p) on the standard monomials, where the nonzero
  // multiplier m in K[U] is returned through multiplier.
  std::vector<Polynomial> reduce(Polynomial p, Polynomial& multiplier) const {
    p = p.map_to(ring_);
    multiplier = Polynomial::constant(ring_, 1);
    for (;;) {
      const Divisor* hit = nullptr;
      Monomial ym;
      for (const auto& term : p.terms()) {
        ym = restrict(term.mono, Y_);
        for (const auto& d : divisors_) {
          if (d.lm_y.divides(ym)) {
            hit = &d;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) break;
      Polynomial c = y_coefficient(p, ym);
      Polynomial shifted = hit->g->mul_term(1, hit->lm_y.quotient_of(ym));
      if (auto exact = divide_exact(c, hit->lc)) {
        p -= *exact * shifted;
      } else {
        Polynomial h = multivariate_gcd(c, hit->lc);
        Polynomial a = *divide_exact(hit->lc, h);
        p = a * p - *divide_exact(c, h) * shifted;
        multiplier *= a;
      }
    }
    std::vector<Polynomial> out(basis_.size(), Polynomial(ring_));
    for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = y_coefficient(p, basis_[i]);
    return out;
  }

  Polynomial combine(const std::vector<Polynomial>& v) const {
    Polynomial out(ring_);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) out += v[i].mul_term(1, basis_[i]);
    }
    return out;
  }

 private:
  struct Divisor {
    Monomial lm_y;
    Polynomial lc;  // coefficient of lm_y, in K[U]
    const Polynomial* g;
  };

  // Coefficient in K[U] of the Y-monomial ym in f.
  Polynomial y_coefficient(const Polynomial& f, const Monomial& ym) const {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      if (restrict(t.mono, Y_) == ym) terms.push_back({t.coef, ym.quotient_of(t.mono)});
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
  }

  std::vector<std::size_t> Y_;
  RingPtr ring_;
  GroebnerBasis gb_;
  std::vector<Divisor> divisors_;
  std::vector<Monomial> basis_;
};

Polynomial content_of(const std::vector<Polynomial>& v) {
  Polynomial g;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = g.ring() ? multivariate_gcd(g, x) : primitive_normalize(x);
    if (g.is_constant()) break;
  }
  return g;
}

void divide_all(std::vector<Polynomial>& v, const Polynomial& g) {
  for (auto& x : v) {
    if (!x.is_zero()) x = *divide_exact(x, g);
  }
}

}  // namespace

MinimalPolynomial minimal_polynomial_fraction_free(const Polynomial& g, const Ideal& I,
                                                   const std::vector<std::size_t>& U) {
  const RingPtr& base = I.ring();
  auto Y = complement(*base, U);
  FunctionFieldQuotient Q(I, Y);
  const RingPtr& ring = Q.ring();
  MinimalPolynomial mp;
  mp.of = g.map_to(base);
  mp.ring = ring_with_t(base, Y, U);
  mp.t = base->size();
  if (Q.dimension() == 0) throw PreconditionError("minimal polynomial modulo the unit ideal");

  // w_k = (num_k / den_k) * g^k modulo the extension of I.
  struct Row {
    std::vector<Polynomial> v;
    std::vector<Polynomial> combo;  // coefficients of w_0..w_k
    std::size_t pivot;
  };
  std::vector<Row> echelon;
  std::vector<Polynomial> num, den;
  Polynomial ignored;
  std::vector<Polynomial> w = Q.reduce(Polynomial::constant(ring, 1), ignored);
  num.push_back(Polynomial::constant(ring, 1));
  den.push_back(Polynomial::constant(ring, 1));
  const Polynomial gr = g.map_to(ring);
  const std::size_t D = Q.dimension();
  for (std::size_t k = 0; k <= D; ++k) {
    Row row{w, std::vector<Polynomial>(k + 1, Polynomial(ring)), D};
    row.combo[k] = Polynomial::constant(ring, 1);
    for (const auto& e : echelon) {
      if (row.v[e.pivot].is_zero()) continue;
      Polynomial h = multivariate_gcd(e.v[e.pivot], row.v[e.pivot]);
      Polynomial a = *divide_exact(e.v[e.pivot], h);
      Polynomial b = *divide_exact(row.v[e.pivot], h);
      for (std::size_t i = 0; i < D; ++i) row.v[i] = a * row.v[i] - b * e.v[i];
      for (std::size_t i = 0; i < e.combo.size(); ++i) {
        row.combo[i] = a * row.combo[i] - b * e.combo[i];
      }
      for (std::size_t i = e.combo.size(); i <= k; ++i) row.combo[i] = a * row.combo[i];
      std::vector<Polynomial> all = row.v;
      all.insert(all.end(), row.combo.begin(), row.combo.end());
      Polynomial c = content_of(all);
      if (!c.is_constant()) {
        divide_all(row.v, c);
        divide_all(row.combo, c);
      }
    }
    std::size_t pivot = D;
    for (std::size_t i = 0; i < D; ++i) {
      if (!row.v[i].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == D) {
      // sum combo_i * num_i / den_i * g^i lies in the extension of I.
      Polynomial poly(mp.ring);
      Polynomial t = Polynomial::variable(mp.ring, mp.t);
      for (std::size_t i = 0; i <= k; ++i) {
        if (row.combo[i].is_zero()) continue;
        Polynomial c = row.combo[i] * num[i];
        for (std::size_t j = 0; j <= k; ++j) {
          if (j != i) c *= den[j];
        }
        poly += c.map_to(mp.ring) * t.pow(static_cast<unsigned>(i));
      }
      mp.poly = primitive_in(poly, mp.t);
      return mp;
    }
    row.pivot = pivot;
    auto at = std::find_if(echelon.begin(), echelon.end(),
                           [&](const Row& e) { return e.pivot > pivot; });
    echelon.insert(at, std::move(row));

    Polynomial m;
    w = Q.reduce(gr * Q.combine(w), m);
    Polynomial n = num.back() * m;
    Polynomial d = den.back();
    Polynomial c = content_of(w);
    if (c.ring() && !c.is_constant()) {
      divide_all(w, c);
      d *= c;
    }
    Polynomial h = multivariate_gcd(n, d);
    if (!h.is_constant()) {
      n = *divide_exact(n, h);
      d = *divide_exact(d, h);
    }
    num.push_back(n);
    den.push_back(d);
  }
  throw InternalError("no linear dependency among powers over the function field");
}

MinimalPolynomial minimal_polynomial_elim(const Polynomial& g, const Ideal& I,
                                          const std::vector<std::size_t>& U) {
  const RingPtr& base = I.ring();
  auto Y = complement(*base, U);
  MinimalPolynomial mp;
  mp.of = g.map_to(base);
  mp.ring = ring_with_t(base, Y, U);
  mp.t = base->size();
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(f.map_to(mp.ring));
  gens.push_back(Polynomial::variable(mp.ring, mp.t) - mp.of.map_to(mp.ring));
  auto gb = buchberger(mp.ring, gens);
  std::vector<bool> no_y(mp.ring->size(), true);
  for (auto y : Y) no_y[y] = false;
  const Polynomial* best = nullptr;
  for (const auto& e : gb.elements) {
    if (!e.uses_only(no_y)) continue;
    unsigned d = e.degree_in(mp.t);
    if (d == 0) throw PreconditionError("extension is the unit ideal over the coefficient field");
    if (!best || d < best->degree_in(mp.t)) best = &e;
  }
  if (!best) throw PreconditionError("ideal is not zero-dimensional over the coefficient field");
  mp.poly = primitive_in(*best, mp.t);
  return mp;
}

MinimalPolynomial minimal_polynomial_linear(const Polynomial& g, const Ideal& I) {
  const RingPtr& base = I.ring();
  std::vector<std::size_t> all(base->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  MinimalPolynomial mp;
  mp.of = g.map_to(base);
  mp.ring = ring_with_t(base, all, {});
  mp.t = base->size();
  const auto& gb = I.groebner();
  if (gb.is_unit()) throw PreconditionError("minimal polynomial modulo the unit ideal");
  auto basis = standard_monomials(gb.leading_monomials(), all);
  auto index_of = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == m) return i;
    }
    throw InternalError("normal form outside the standard monomials");
  };
  std::size_t D = basis.size();
  // rows[k] = coordinates of NF(g^k); echelon keeps reduced rows with the
  // combination of powers that produced them.
  struct Row {
    std::vector<Rational> v;
    std::vector<Rational> combo;  // coefficients of g^0..g^k
    std::size_t pivot;
  };
  std::vector<Row> echelon;
  Polynomial power = Polynomial::constant(base, 1);
  for (std::size_t k = 0; k <= D; ++k) {
    Polynomial nf = normal_form(power, gb);
    Row row{std::vector<Rational>(D), std::vector<Rational>(k + 1), D};
    for (const auto& t : nf.terms()) row.v[index_of(t.mono)] = t.coef;
    row.combo[k] = 1;
    for (const auto& e : echelon) {
      const Rational c = row.v[e.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < D; ++i) row.v[i] -= c * e.v[i];
      for (std::size_t i = 0; i < e.combo.size(); ++i) row.combo[i] -= c * e.combo[i];
    }
    std::size_t pivot = D;
    for (std::size_t i = 0; i < D; ++i) {
      if (row.v[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == D) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < row.combo.size(); ++i) {
        if (row.combo[i] != 0) terms.push_back({row.combo[i], Monomial::variable(mp.t, static_cast<unsigned>(i))});
      }
      mp.poly = primitive_normalize(Polynomial::from_terms(mp.ring, std::move(terms)));
      return mp;
    }
    Rational inv = 1 / row.v[pivot];
    for (auto& x : row.v) x *= inv;
    for (auto& x : row.combo) x *= inv;
    row.pivot = pivot;
    // Keep earlier rows reduced at the new pivot.
    for (auto& e : echelon) {
      const Rational c = e.v[pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < D; ++i) e.v[i] -= c * row.v[i];
      e.combo.resize(row.combo.size());
      for (std::size_t i = 0; i < row.combo.size(); ++i) e.combo[i] -= c * row.combo[i];
    }
    echelon.push_back(std::move(row));
    power = normal_form(power * mp.of, gb);
  }
  throw InternalError("no linear dependency among powers");
}

MinimalPolynomial minimal_polynomial(const Polynomial& g, const Ideal& I,
                                     const std::vector<std::size_t>& U) {
  if (U.empty()) return minimal_polynomial_linear(g, I);
  return minimal_polynomial_fraction_free(g, I, U);
}

GenericPosition generic_position_search(const Ideal& I, const std::vector<std::size_t>& U,
                                        const PrimdecOptions& options) {
  const RingPtr& base = I.ring();
  auto Y = complement(*base, U);
  if (Y.empty()) throw PreconditionError("no variables left for a generic element");
  std::vector<Polynomial> extra;
  std::map<std::size_t, MinimalPolynomial> single;
  for (auto y : Y) {
    auto mp = minimal_polynomial(Polynomial::variable(base, y), I, U);
    Polynomial s = squarefree_in(mp.poly, mp.t);
    if (s.degree_in(mp.t) < mp.poly.degree_in(mp.t)) extra.push_back(evaluate_at(mp, s, base));
    single.emplace(y, std::move(mp));
  }
  Ideal rad = extra.empty() ? I : sum(I, extra);
  std::size_t D = quotient_dimension(rad, Y);

  unsigned tried = 0;
  auto accept = [&](const MinimalPolynomial& mp) {
    Polynomial s = squarefree_in(mp.poly, mp.t);
    return s.degree_in(mp.t) == D;
  };
  for (auto it = Y.rbegin(); it != Y.rend(); ++it) {
    if (++tried > options.candidate_budget) break;
    const auto& mp = single.at(*it);
    if (accept(mp)) return {mp.of, mp, D, rad};
  }
  if (Y.size() > 1) {
    for (int k = 1; tried < options.candidate_budget; ++k) {
      for (int sign : {1, -1}) {
        if (++tried > options.candidate_budget) break;
        Rational c = sign * k;
        Polynomial g(base);
        Rational coef = 1;
        for (auto it = Y.rbegin(); it != Y.rend(); ++it) {
          g += Polynomial::variable(base, *it) * coef;
          coef *= c;
        }
        auto mp = minimal_polynomial(g, I, U);
        if (accept(mp)) return {g, mp, D, rad};
      }
    }
  }
  throw ResourceLimit("no element in generic position within the candidate budget");
}

std::vector<PrimaryComponent> zerodim_decompose(const Ideal& I, const std::vector<std::size_t>& U,
                                                Want want, const PrimdecOptions& options) {
  const RingPtr& base = I.ring();
  auto Y = complement(*base, U);
  if (Y.empty()) return {{I, I}};
  auto gp = generic_position_search(I, U, options);
  const auto& mp = gp.minpoly;
  auto fac = factor_over_function_field(mp.poly, mp.t, U, options.factor);
  std::vector<PrimaryComponent> out;
  for (const auto& [m, e] : fac.factors) {
    Polynomial mg = evaluate_at(mp, m, base);
    Ideal prime = contraction(sum(gp.radical, {mg}), U).ideal.canonical();
    if (want == Want::prime) {
      out.push_back({prime, prime});
      continue;
    }
    Ideal primary = prime;
    if (e > 1 || !(gp.radical == I)) {
      primary = contraction(sum(I, {mg.pow(e)}), U).ideal.canonical();
    }
    out.push_back({primary, prime});
  }
  return out;
}

namespace {

void decompose_rec(const Ideal& I, Want want, const PrimdecOptions& options, unsigned depth,
                   std::vector<PrimaryComponent>& out) {
  if (I.is_unit()) return;
  if (depth > options.max_depth) throw ResourceLimit("decomposition recursion depth exceeded");
  auto info = dimension_and_mis(I);
  auto C = contraction(I, info.mis);
  auto comps = zerodim_decompose(C.ideal, info.mis, want, options);
  out.insert(out.end(), comps.begin(), comps.end());
  if (C.h.is_constant() || C.exponent == 0) return;
  Polynomial hs = want == Want::prime ? C.h : C.h.pow(C.exponent);
  decompose_rec(sum(I, {hs}), want, options, depth + 1, out);
}

}  // namespace

std::vector<PrimaryComponent> minimality_cleanup(std::vector<PrimaryComponent> comps) {
  // (M-2): merge components sharing a radical.
  std::vector<PrimaryComponent> merged;
  for (auto& c : comps) {
    bool done = false;
    for (auto& m : merged) {
      if (m.prime == c.prime) {
        m.primary = intersect(m.primary, c.primary).canonical();
        done = true;
        break;
      }
    }
    if (!done) merged.push_back(std::move(c));
  }
  // (M-1): drop embedded components containing the intersection of the rest.
  for (std::size_t i = merged.size(); i-- > 0;) {
    if (merged.size() < 2) break;
    bool embedded = false;
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (j != i && merged[i].prime.contains(merged[j].prime)) embedded = true;
    }
    if (!embedded) continue;
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (j != i) others.push_back(merged[j].primary);
    }
    if (merged[i].primary.contains(intersect(others))) {
      merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return merged;
}

bool is_irredundant(const std::vector<PrimaryComponent>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].prime == comps[j].prime) return false;
    }
  }
  if (comps.size() < 2) return true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j != i) others.push_back(comps[j].primary);
    }
    if (comps[i].primary.contains(intersect(others))) return false;
  }
  return true;
}

namespace {

void sort_components(std::vector<PrimaryComponent>& comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    return a.primary.to_string() < b.primary.to_string();
  });
}

}  // namespace

std::vector<PrimaryComponent> primary_decompose(const Ideal& I, const PrimdecOptions& options) {
  if (I.is_unit()) throw PreconditionError("primary decomposition of the unit ideal");
  std::vector<PrimaryComponent> raw;
  decompose_rec(I, Want::primary, options, 0, raw);
  auto out = minimality_cleanup(std::move(raw));
  sort_components(out);
  return out;
}

std::vector<Ideal> minimal_primes(const Ideal& I, const PrimdecOptions& options) {
  if (I.is_unit()) return {};
  std::vector<PrimaryComponent> raw;
  decompose_rec(I, Want::prime, options, 0, raw);
  std::vector<Ideal> primes;
  for (auto& c : raw) {
    bool dup = false;
    for (const auto& p : primes) {
      if (p == c.prime) dup = true;
    }
    if (!dup) primes.push_back(c.prime);
  }
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j) {
      if (j != i && primes[i].contains(primes[j])) minimal = false;
    }
    if (minimal) out.push_back(primes[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

Ideal radical(const Ideal& I, const PrimdecOptions& options) {
  if (I.is_unit()) return I;
  auto primes = minimal_primes(I, options);
  return intersect(primes).canonical();
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::prime:
      return "prime";
    case Primality::primary:
      return "primary";
    case Primality::neither:
      return "neither";
  }
  return "neither";
}

Primality is_primary(const Ideal& Q, const PrimdecOptions& options) {
  if (Q.is_unit()) throw PreconditionError("the unit ideal is not primary");
  auto info = dimension_and_mis(Q);
  auto C = contraction(Q, info.mis);
  if (!(C.ideal == Q)) return Primality::neither;
  auto Y = complement(*Q.ring(), info.mis);
  if (Y.empty()) return Primality::prime;
  auto gp = generic_position_search(Q, info.mis, options);
  auto fac = factor_over_function_field(gp.minpoly.poly, gp.minpoly.t, info.mis, options.factor);
  if (fac.factors.size() != 1) return Primality::neither;
  if (quotient_dimension(Q, Y) == gp.radical_dimension) return Primality::prime;
  return Primality::primary;
}

Ideal equidimensional_hull(const Ideal& I, const PrimdecOptions& options) {
  auto comps = primary_decompose(I, options);
  int top = -1;
  std::vector<int> dims;
  for (const auto& c : comps) {
    dims.push_back(dimension(c.prime));
    top = std::max(top, dims.back());
  }
  std::vector<Ideal> keep;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (dims[i] == top) keep.push_back(comps[i].primary);
  }
  return intersect(keep).canonical();
}

int dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  return dimension_and_mis(I).dimension;
}

}  // namespace cpdskit
