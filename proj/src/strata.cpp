#include "cpdskit/strata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cpdskit/errors.hpp"
#include "cpdskit/factor.hpp"
#include "cpdskit/groebner.hpp"
#include "cpdskit/ideal_ops.hpp"
#include "cpdskit/primdec.hpp"

namespace cpdskit {

namespace {

RingPtr parameter_ring_of(const RingPtr& ring) { return ring->parameter_ring(); }

std::map<std::size_t, Rational> values_for(const RingPtr& ring,
                                           const Point& alpha) {
  std::map<std::size_t, Rational> values;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto it = alpha.find(ring->name(i));
    if (it == alpha.end()) {
      throw PreconditionError("point does not assign parameter " + ring->name(i));
    }
    values.emplace(i, it->second);
  }
  return values;
}

std::string format_closed(const Ideal& ideal) {
  std::string out = "V(";
  const auto& els = ideal.groebner().elements;
  for (std::size_t i = els.size(); i-- > 0;) {
    out += els[i].to_string();
    if (i) out += ", ";
  }
  return out + ")";
}

}  // namespace

LocallyClosedSet::LocallyClosedSet(const Ideal& zero, const Ideal& nonzero) {
  RingPtr params = parameter_ring_of(zero.ring());
  zero_ = zero.map_to(params);
  nonzero_ = sum(zero_, nonzero.map_to(params).generators());
}

LocallyClosedSet LocallyClosedSet::full(const RingPtr& params) {
  RingPtr r = parameter_ring_of(params);
  return LocallyClosedSet(Ideal::zero(r), Ideal::unit(r));
}

LocallyClosedSet LocallyClosedSet::closed(const Ideal& zero) {
  RingPtr r = parameter_ring_of(zero.ring());
  return LocallyClosedSet(zero, Ideal::unit(r));
}

bool LocallyClosedSet::is_empty_over_C() const {
  if (zero_.is_unit()) return true;
  for (const auto& g : nonzero_.generators()) {
    if (!radical_contains(zero_, g)) return false;
  }
  return true;
}

bool LocallyClosedSet::contains(const Point& alpha) const {
  auto values = values_for(ring(), alpha);
  for (const auto& g : zero_.generators()) {
    if (evaluate(g, values) != 0) return false;
  }
  for (const auto& g : nonzero_.generators()) {
    if (evaluate(g, values) != 0) return true;
  }
  return false;
}

LocallyClosedSet LocallyClosedSet::simplified() const {
  if (zero_.is_unit() || nonzero_.is_unit()) {
    return LocallyClosedSet(zero_.is_unit() ? zero_ : radical(zero_), nonzero_);
  }
  Ideal closure = radical(saturate(zero_, nonzero_));
  return LocallyClosedSet(closure, nonzero_);
}

std::string LocallyClosedSet::to_string() const {
  if (zero_.is_unit()) return "{}";
  std::string out;
  if (zero_.groebner().is_zero()) {
    std::size_t m = ring()->size();
    out = m == 1 ? "Q" : "Q^" + std::to_string(m);
  } else {
    out = format_closed(zero_);
  }
  if (!nonzero_.is_unit()) out += " \\ " + format_closed(nonzero_);
  return out;
}

ConstructibleSet::ConstructibleSet(RingPtr params,
                                   std::vector<LocallyClosedSet> cells)
    : ring_(parameter_ring_of(params)), cells_(std::move(cells)) {}

ConstructibleSet ConstructibleSet::full(const RingPtr& params) {
  return ConstructibleSet(params, {LocallyClosedSet::full(params)});
}

ConstructibleSet ConstructibleSet::single(const LocallyClosedSet& cell) {
  return ConstructibleSet(cell.ring(), {cell});
}

void ConstructibleSet::add(const LocallyClosedSet& cell) {
  cells_.push_back(cell);
}

bool ConstructibleSet::is_empty_over_C() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const auto& c) { return c.is_empty_over_C(); });
}

bool ConstructibleSet::contains(const Point& alpha) const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [&](const auto& c) { return c.contains(alpha); });
}

ConstructibleSet ConstructibleSet::pruned() const {
  ConstructibleSet out(ring_);
  for (const auto& c : cells_) {
    if (!c.is_empty_over_C()) out.add(c);
  }
  return out;
}

std::string ConstructibleSet::to_string() const {
  if (cells_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += " u ";
    out += cells_[i].to_string();
  }
  return out;
}

LocallyClosedSet intersect(const LocallyClosedSet& a, const LocallyClosedSet& b) {
  return LocallyClosedSet(sum(a.zero(), b.zero()), product(a.nonzero(), b.nonzero()));
}

ConstructibleSet difference(const LocallyClosedSet& a, const LocallyClosedSet& b) {
  // Outside V(b.zero) or inside V(b.nonzero).
  ConstructibleSet out(a.ring());
  out.add(LocallyClosedSet(a.zero(), product(a.nonzero(), b.zero())));
  out.add(LocallyClosedSet(sum(a.zero(), b.nonzero()), a.nonzero()));
  return out.pruned();
}

ConstructibleSet set_union(const ConstructibleSet& a, const ConstructibleSet& b) {
  ConstructibleSet out(a.ring() ? a.ring() : b.ring());
  for (const auto& c : a.cells()) out.add(c);
  for (const auto& c : b.cells()) out.add(c);
  return out;
}

ConstructibleSet set_intersection(const ConstructibleSet& a,
                                  const ConstructibleSet& b) {
  ConstructibleSet out(a.ring() ? a.ring() : b.ring());
  for (const auto& x : a.cells()) {
    for (const auto& y : b.cells()) {
      auto c = intersect(x, y);
      if (!c.is_empty_over_C()) out.add(c);
    }
  }
  return out;
}

ConstructibleSet set_difference(const ConstructibleSet& a,
                                const ConstructibleSet& b) {
  ConstructibleSet current = a.pruned();
  for (const auto& y : b.cells()) {
    ConstructibleSet next(current.ring());
    for (const auto& x : current.cells()) {
      const ConstructibleSet piece = difference(x, y);
      for (const auto& c : piece.cells()) next.add(c);
    }
    current = std::move(next);
  }
  return current;
}

ConstructibleSet complement(const ConstructibleSet& a) {
  return set_difference(ConstructibleSet::full(a.ring()), a);
}

unsigned height(const Rational& q) {
  Integer num = abs(q.get_num());
  Integer h = num > q.get_den() ? num : q.get_den();
  return h.fits_uint_p() ? static_cast<unsigned>(h.get_ui()) : ~0u;
}

std::vector<Rational> rationals_up_to_height(unsigned bound) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned h = 1; h <= bound; ++h) {
    // Integers of height h first, then proper fractions p/h and h/q.
    std::vector<Rational> level;
    level.emplace_back(h);
    for (unsigned q = 2; q < h; ++q) {
      if (std::gcd(h, q) == 1) level.emplace_back(Rational(h, q));
    }
    for (unsigned p = 1; p < h; ++p) {
      if (std::gcd(p, h) == 1) level.emplace_back(Rational(p, h));
    }
    for (auto& q : level) {
      q.canonicalize();
      out.push_back(q);
      out.push_back(-q);
    }
  }
  return out;
}

namespace {

// Rational roots of a nonzero univariate polynomial, sorted by height.
std::vector<Rational> rational_roots(const Polynomial& f, std::size_t var,
                                     unsigned bound) {
  std::vector<Rational> roots;
  auto fac = factor_univariate_Q(f);
  for (const auto& [g, e] : fac.factors) {
    (void)e;
    if (g.degree_in(var) != 1) continue;
    auto coeffs = coefficients_in(g, var);
    Rational r = -(coeffs[0].is_zero() ? Rational(0) : *coeffs[0].constant_value()) /
                 *coeffs[1].constant_value();
    if (height(r) <= bound) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return roots;
}

void enumerate_points(const LocallyClosedSet& cell, unsigned bound,
                      std::size_t limit,
                      const std::function<bool(const Point&)>& accept) {
  if (cell.zero().is_unit() || limit == 0) return;
  RingPtr ring = cell.ring();
  std::size_t m = ring->size();
  // Basis in lex order on the parameters, last one solved first.
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  RingPtr lex = ring->with_order(MonomialOrder({{all, BlockKind::lex}}, m));
  std::vector<Polynomial> basis;
  for (const auto& g : cell.zero().groebner_in(lex).elements) {
    basis.push_back(g.map_to(ring));
  }
  const auto grid = rationals_up_to_height(bound);
  std::map<std::size_t, Rational> values;
  std::size_t found = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    // Returns true to stop the search.
    if (k == 0) {
      Point alpha;
      for (const auto& [i, v] : values) alpha.emplace(ring->name(i), v);
      if (!cell.contains(alpha)) return false;
      ++found;
      return !accept(alpha) || found >= limit;
    }
    std::size_t var = k - 1;
    Polynomial g(ring);
    bool constrained = false;
    for (const auto& b : basis) {
      auto support = b.support();
      if (std::any_of(support.begin(), support.end(),
                      [&](std::size_t i) { return i < var; })) {
        continue;
      }
      Polynomial s = evaluate_partial(b, values);
      if (s.is_zero()) continue;
      if (s.is_constant()) return false;
      g = constrained ? multivariate_gcd(g, s) : s;
      constrained = true;
      if (g.is_constant()) return false;
    }
    const std::vector<Rational> candidates =
        constrained ? rational_roots(g, var, bound) : grid;
    for (const auto& c : candidates) {
      values[var] = c;
      if (assign(k - 1)) return true;
    }
    values.erase(var);
    return false;
  };
  assign(m);
}

}  // namespace

std::optional<Point> sample_rational_point(const LocallyClosedSet& cell,
                                           unsigned height_bound) {
  std::optional<Point> out;
  enumerate_points(cell, height_bound, 1, [&](const Point& p) {
    out = p;
    return true;
  });
  return out;
}

std::optional<Point> sample_rational_point(const ConstructibleSet& set,
                                           unsigned height_bound) {
  for (const auto& c : set.cells()) {
    if (auto p = sample_rational_point(c, height_bound)) return p;
  }
  return std::nullopt;
}

std::vector<Point> rational_points(const LocallyClosedSet& cell,
                                   unsigned height_bound, std::size_t limit) {
  std::vector<Point> out;
  enumerate_points(cell, height_bound, limit, [&](const Point& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

void cgs_recurse(const RingPtr& ring, const std::vector<Polynomial>& F,
                 const Ideal& region, std::vector<CgsSegment>& out) {
  RingPtr params = ring->parameter_ring();
  GroebnerBasis G = buchberger(ring, F);
  std::vector<Polynomial> in_params;
  std::vector<Polynomial> rest;
  for (const auto& g : G.elements) {
    if (g.ring()->num_parameters() == 0 || !leading_data(g).lm.is_one()) {
      rest.push_back(g);
    } else {
      in_params.push_back(g.map_to(params));
    }
  }
  Ideal cond(params, in_params);
  LocallyClosedSet outside(region, cond);
  if (!outside.is_empty_over_C()) {
    out.push_back({outside, {Polynomial::constant(ring, 1)}});
  }
  if (G.is_unit()) return;
  std::vector<Polynomial> lcs;
  Polynomial h = Polynomial::constant(params, 1);
  for (const auto& g : rest) {
    Polynomial lc = leading_data(g).lc.map_to(params);
    if (lc.is_constant()) continue;
    lc = squarefree_part(lc);
    if (std::find(lcs.begin(), lcs.end(), lc) != lcs.end()) continue;
    lcs.push_back(lc);
    h *= lc;
  }
  LocallyClosedSet generic(cond, Ideal(params, {h}));
  if (!generic.is_empty_over_C()) out.push_back({generic, {rest.rbegin(), rest.rend()}});
  for (const auto& lc : lcs) {
    std::vector<Polynomial> next = G.elements;
    next.push_back(lc.map_to(ring));
    cgs_recurse(ring, next, sum(cond, {lc}), out);
  }
}

}  // namespace

std::vector<CgsSegment> suzuki_sato_cgs(const std::vector<Polynomial>& F) {
  if (F.empty()) throw PreconditionError("cgs needs at least one polynomial");
  RingPtr ring = F.front().ring();
  std::vector<CgsSegment> out;
  cgs_recurse(ring, F, Ideal::zero(ring->parameter_ring()), out);
  return out;
}

}  // namespace cpdskit
