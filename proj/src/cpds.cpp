#include "cpdskit/cpds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cpdskit/errors.hpp"
#include "cpdskit/factor.hpp"
#include "cpdskit/groebner.hpp"
#include "cpdskit/ideal_ops.hpp"
#include "cpdskit/text.hpp"

namespace cpdskit {

namespace {

RingPtr params_of(const RingPtr& ring) { return ring->parameter_ring(); }

bool strictly_contains(const Ideal& J, const Ideal& H) {
  Ideal h = H.map_to(J.ring());
  return J.contains(h) && !h.contains(J);
}

Ideal radical_or_trivial(const Ideal& J, const PrimdecOptions& options) {
  if (J.is_unit() || J.groebner().is_zero()) return J.canonical();
  return radical(J, options);
}

Ideal trace_ideal(const StabilityTrace& trace, const RingPtr& params,
                  const PrimdecOptions& options) {
  std::vector<Polynomial> gens;
  for (const auto& g : trace.finalize()) gens.push_back(g.map_to(params));
  return radical_or_trivial(Ideal(params, gens), options);
}

// Same variables with the variable block under grevlex and the parameters
// last under lex; internal traced bases run here.
RingPtr working_ring(const RingPtr& ring) {
  std::vector<OrderBlock> blocks;
  OrderBlock vars{ring->non_parameter_indices(), BlockKind::grevlex};
  OrderBlock pars{ring->parameter_indices(), BlockKind::lex};
  if (!vars.vars.empty()) blocks.push_back(vars);
  if (!pars.vars.empty()) blocks.push_back(pars);
  return ring->with_order(MonomialOrder(std::move(blocks), ring->size()));
}

std::vector<Polynomial> lift(const Ideal& H, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : H.generators()) out.push_back(g.map_to(ring));
  return out;
}

// Witness f in Pj \ Pi; the trace of a basis of Pi + <1 - z f> keeps
// phi_alpha(f) outside the radical of phi_alpha(Pi).
std::optional<Ideal> radical_direction(const Ideal& Pi, const Ideal& Pj,
                                       const Ideal& H,
                                       const PrimdecOptions& options) {
  auto witness = inclusion_test(Pj, Pi);
  if (!witness) return std::nullopt;
  RingPtr ring = working_ring(Pi.ring());
  RingPtr rz = prepend_variables(ring, {ring->fresh_name("z")}, VarRole::slack,
                                 std::nullopt);
  std::vector<Polynomial> gens;
  for (const auto& g : Pi.generators()) gens.push_back(g.map_to(rz));
  gens.push_back(Polynomial::constant(rz, 1) -
                 Polynomial::variable(rz, 0) * witness->map_to(rz));
  auto tb = traced_buchberger(gens, StabilityTrace(rz, H.generators()));
  if (tb.status == TraceStatus::split_needed) return std::nullopt;
  if (tb.basis.is_unit()) {
    throw InternalError("radical witness lies in the other prime");
  }
  return trace_ideal(tb.trace, params_of(Pi.ring()), options);
}

Ideal minimality_stability_impl(const std::vector<PrimaryComponent>& filtered,
                                const Ideal& H, const PrimdecOptions& options,
                                Execution execution) {
  RingPtr params = H.ring();
  std::size_t k = filtered.size();
  if (k <= 1) return Ideal::unit(params);
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < k; ++i) jobs.emplace_back(i, i);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) jobs.emplace_back(i, j);
  }
  std::vector<Ideal> parts(jobs.size());
  for_each_index(jobs.size(), execution, [&](std::size_t n) {
    auto [i, j] = jobs[n];
    if (i == j) {
      std::vector<Ideal> others;
      for (std::size_t m = 0; m < k; ++m) {
        if (m != i) others.push_back(filtered[m].primary);
      }
      parts[n] = noninclusion_certificate(intersect(others), filtered[i].primary,
                                          H, options);
      return;
    }
    auto a = radical_direction(filtered[i].prime, filtered[j].prime, H, options);
    auto b = radical_direction(filtered[j].prime, filtered[i].prime, H, options);
    if (a && b) {
      parts[n] = radical_or_trivial(sum(*a, *b), options);
    } else if (a || b) {
      parts[n] = a ? *a : *b;
    } else {
      throw InternalError("components with equal radicals after cleanup");
    }
  });
  return intersect(parts);
}

}  // namespace

const char* to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::feasible:
      return "feasible";
    case Flavor::minimal:
      return "minimal";
    case Flavor::hilbert:
      return "hilbert";
  }
  return "feasible";
}

std::optional<Flavor> parse_flavor(const std::string& text) {
  for (auto f : {Flavor::feasible, Flavor::minimal, Flavor::hilbert}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

bool Segment::is_unit() const {
  return components.size() == 1 && components[0].is_unit();
}

std::string Segment::to_string() const {
  std::string out = "(" + cell.to_string() + ", { ";
  std::optional<GroebnerBasis> base;
  if (cell.cells().size() == 1 && !components.empty()) {
    const RingPtr& ring = components[0].ring();
    base = Ideal(ring, lift(cell.cells()[0].zero(), ring)).groebner();
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    const auto& els = components[i].groebner().elements;
    std::vector<Polynomial> shown;
    for (auto it = els.rbegin(); it != els.rend(); ++it) {
      Polynomial g = *it;
      if (base) g = normal_form(g, *base);
      if (!g.is_zero()) shown.push_back(primitive_normalize(g));
    }
    out += format_ideal(shown);
  }
  return out + (components.empty() ? "})" : " })");
}

ConstructibleSet Cpds::covered() const {
  ConstructibleSet out(params_of(source.ring()));
  for (const auto& s : segments) {
    for (const auto& c : s.cell.cells()) out.add(c);
  }
  return out;
}

std::string Cpds::to_string() const {
  if (segments.empty()) return "{}";
  std::string out;
  for (const auto& s : segments) out += s.to_string() + "\n";
  return out;
}

Ideal parameter_condition(const Ideal& I) {
  return condition_ideal(I).map_to(params_of(I.ring()));
}

Ideal parameter_condition_radical(const Ideal& I, const PrimdecOptions& options) {
  return radical_or_trivial(parameter_condition(I), options);
}

std::vector<PrimaryComponent> filtered_pd(const Ideal& I,
                                          const std::vector<PrimaryComponent>& Q,
                                          const PrimdecOptions& options) {
  Ideal cond = parameter_condition_radical(I, options);
  std::vector<PrimaryComponent> out;
  for (const auto& c : Q) {
    if (parameter_condition_radical(c.primary, options) == cond) out.push_back(c);
  }
  if (out.empty()) {
    throw InternalError("filtered primary decomposition is empty");
  }
  return out;
}

Ideal pd2_trace(const std::vector<Ideal>& components, const Ideal& H,
                const PrimdecOptions& options) {
  RingPtr params = H.ring();
  std::size_t r = components.size();
  if (r <= 1) return Ideal::unit(params);
  // Every partial intersection keeps condition ideal H when the running
  // intersection starts from a component whose condition ideal is H.
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  for (std::size_t i = 0; i < r; ++i) {
    if (H.contains(parameter_condition(components[i]).map_to(params))) {
      std::swap(order[0], order[i]);
      break;
    }
  }
  RingPtr work = working_ring(components[0].ring());
  RingPtr slack = prepend_variables(work, {work->fresh_name("t")}, VarRole::slack,
                                    std::nullopt);
  Polynomial t = Polynomial::variable(slack, 0);
  Polynomial rest = Polynomial::constant(slack, 1) - t;
  std::vector<Polynomial> acc = lift(components[order[0]], work);
  std::vector<Ideal> traces;
  for (std::size_t k = 1; k < r; ++k) {
    std::size_t i = order[k];
    std::vector<Polynomial> gens;
    for (const auto& g : acc) gens.push_back(t * g.map_to(slack));
    for (const auto& g : components[i].generators()) {
      gens.push_back(rest * g.map_to(slack));
    }
    auto tb = traced_buchberger(gens, StabilityTrace(slack, H.generators()));
    if (tb.status == TraceStatus::split_needed) {
      throw InternalError("slack ideal has a condition ideal larger than the stratum");
    }
    traces.push_back(trace_ideal(tb.trace, params, options));
    acc.clear();
    for (const auto& g : tb.basis.elements) {
      if (g.degree_in(0) == 0) acc.push_back(g.map_to(work));
    }
  }
  return intersect(traces);
}

Ideal pd2_stability(const Ideal& I, const std::vector<PrimaryComponent>& components,
                    const Ideal& H, const PrimdecOptions& options) {
  (void)I;
  std::vector<Ideal> primaries;
  for (const auto& c : components) primaries.push_back(c.primary);
  std::vector<Ideal> parts{pd2_trace(primaries, H, options)};
  for (const auto& c : components) {
    Ideal cond = parameter_condition_radical(c.primary, options);
    if (!(cond == H)) parts.push_back(cond);
  }
  return intersect(parts);
}

Ideal noninclusion_certificate(const Ideal& I1, const Ideal& I2, const Ideal& H,
                               const PrimdecOptions& options) {
  RingPtr ring = working_ring(I2.ring());
  RingPtr params = params_of(I2.ring());
  auto tb = traced_buchberger(lift(I2, ring), StabilityTrace(ring, H.generators()));
  if (tb.status == TraceStatus::split_needed) {
    throw PreconditionError("condition ideal of the containing ideal differs from the stratum");
  }
  std::optional<Ideal> best;
  const Ideal first = I1.map_to(ring);
  for (const auto& f : first.groebner().elements) {
    StabilityTrace trace = tb.trace;
    auto pr = pseudo_normal_form(f, tb.basis, trace);
    if (pr.remainder.is_zero()) continue;
    std::vector<Polynomial> coeffs;
    bool constant = false;
    for (const auto& [m, c] : coefficients_over_parameters(pr.remainder)) {
      (void)m;
      coeffs.push_back(c.map_to(params));
      constant = constant || c.is_constant();
    }
    Ideal J1 = trace_ideal(trace, params, options);
    Ideal J = constant ? J1
                       : intersect(J1, radical_or_trivial(sum(H, coeffs), options));
    if (!best || constant) best = J;
    if (constant) break;
  }
  if (!best) throw PreconditionError("first ideal is contained in the second");
  return *best;
}

Ideal minimality_stability(const std::vector<PrimaryComponent>& filtered,
                           const Ideal& H, const PrimdecOptions& options) {
  return minimality_stability_impl(filtered, H, options, Execution::parallel);
}

namespace {

class Runner {
 public:
  Runner(const Ideal& source, Flavor flavor, const CpdsOptions& options)
      : ring_(source.ring()),
        params_(params_of(source.ring())),
        flavor_(flavor),
        options_(options) {}

  std::vector<Segment> run(const Ideal& I, const Ideal& region, unsigned depth) const {
    if (depth > options_.max_depth) {
      throw ResourceLimit("recursion depth exceeded");
    }
    std::vector<Segment> out;
    Ideal cond = parameter_condition_radical(I, options_.primdec);
    unit_segment(region, cond, out);
    if (I.is_unit()) return out;
    std::vector<Ideal> primes;
    if (cond.groebner().is_zero()) {
      primes.push_back(cond);
    } else {
      primes = minimal_primes(cond, options_.primdec);
    }
    std::vector<std::vector<Segment>> results(primes.size());
    for_each_index(primes.size(), options_.execution, [&](std::size_t i) {
      results[i] = branch(I, primes[i], depth);
    });
    for (auto& r : results) {
      for (auto& s : r) out.push_back(std::move(s));
    }
    return out;
  }

 private:
  void unit_segment(const Ideal& region, const Ideal& cond,
                    std::vector<Segment>& out) const {
    if (region == cond) return;
    LocallyClosedSet cell(region, cond);
    if (cell.is_empty_over_C()) return;
    out.push_back({ConstructibleSet::single(cell.simplified()),
                   {Ideal::unit(ring_)},
                   {}});
  }

  std::vector<Segment> branch(const Ideal& I, const Ideal& H, unsigned depth) const {
    std::vector<Segment> out;
    Ideal IH = sum(I, lift(H, ring_));
    Ideal condIH = parameter_condition_radical(IH, options_.primdec);
    if (!(condIH == H)) {
      unit_segment(H, condIH, out);
      for (auto& s : run(sum(I, lift(condIH, ring_)), condIH, depth + 1)) {
        out.push_back(std::move(s));
      }
      return out;
    }
    auto comps = primary_decompose(IH, options_.primdec);
    std::vector<PrimaryComponent> kept;
    for (const auto& c : comps) {
      if (parameter_condition_radical(c.primary, options_.primdec) == H) kept.push_back(c);
    }
    if (kept.empty()) throw InternalError("filtered primary decomposition is empty");

    Ideal J;
    if (flavor_ == Flavor::feasible) {
      J = pd2_stability(IH, comps, H, options_.primdec);
    } else {
      Ideal pd2;
      Ideal minimal;
      for_each_index(2, options_.execution, [&](std::size_t n) {
        if (n == 0) {
          pd2 = pd2_stability(IH, comps, H, options_.primdec);
        } else {
          minimal = minimality_stability_impl(kept, H, options_.primdec,
                                              options_.execution);
        }
      });
      J = intersect(pd2, minimal);
    }
    std::vector<Ideal> stored;
    for (const auto& c : kept) stored.push_back(c.primary);
    if (!strictly_contains(J, H)) {
      throw InternalError("stability ideal does not strictly contain the stratum");
    }
    for (auto& q : stored) q = q.canonical();
    out.push_back({ConstructibleSet::single(LocallyClosedSet(H, J)), stored, {}});
    for (auto& s : run(sum(I, lift(J, ring_)), J, depth + 1)) {
      out.push_back(std::move(s));
    }
    return out;
  }

  RingPtr ring_;
  RingPtr params_;
  Flavor flavor_;
  const CpdsOptions& options_;
};

Cpds run_cpds(const Ideal& I, Flavor flavor, const CpdsOptions& options) {
  Cpds out;
  out.source = I;
  out.flavor = flavor;
  if (I.is_unit()) return out;
  Runner runner(I, flavor == Flavor::hilbert ? Flavor::minimal : flavor, options);
  // Separate branches can reach the same stratum; keep one copy.
  std::set<std::string> seen;
  for (auto& s : runner.run(I, Ideal::zero(params_of(I.ring())), 0)) {
    if (seen.insert(s.to_string()).second) out.segments.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> set_minus(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (auto x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  }
  return out;
}

struct LocalMinpoly {
  RingPtr ring;
  std::size_t t = 0;
  Polynomial poly;
};

// Minimal polynomial of g modulo the prime P over Frac(K[A]/H)(U), by
// elimination under Y >> t >> (U u A).
LocalMinpoly local_minimal_polynomial(const Polynomial& g, const Ideal& P,
                                      const std::vector<std::size_t>& Y) {
  const RingPtr& base = P.ring();
  std::vector<std::string> names = base->names();
  std::vector<VarRole> roles = base->roles();
  std::size_t t = names.size();
  names.push_back(base->fresh_name("t"));
  roles.push_back(VarRole::variable);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < base->size(); ++i) {
    if (std::find(Y.begin(), Y.end(), i) == Y.end()) rest.push_back(i);
  }
  std::vector<OrderBlock> blocks;
  if (!Y.empty()) blocks.push_back({Y, BlockKind::grevlex});
  blocks.push_back({{t}, BlockKind::lex});
  if (!rest.empty()) blocks.push_back({rest, BlockKind::grevlex});
  RingPtr ring = Ring::make_custom(names, roles, MonomialOrder(blocks, names.size()));
  std::vector<Polynomial> gens;
  for (const auto& f : P.generators()) gens.push_back(f.map_to(ring));
  gens.push_back(Polynomial::variable(ring, t) - g.map_to(ring));
  auto gb = buchberger(ring, gens);
  std::vector<bool> no_y(ring->size(), true);
  for (auto y : Y) no_y[y] = false;
  const Polynomial* best = nullptr;
  for (const auto& e : gb.elements) {
    if (!e.uses_only(no_y)) continue;
    unsigned d = e.degree_in(t);
    if (d == 0) continue;
    if (!best || d < best->degree_in(t)) best = &e;
  }
  if (!best) throw PreconditionError("component is not zero-dimensional over Q(U)");
  Polynomial poly = *best;
  Polynomial c = content_in(poly, t);
  if (!c.is_constant()) {
    if (auto q = divide_exact(poly, c)) poly = *q;
  }
  return {ring, t, primitive_normalize(poly)};
}

HilbertCertificate certificate_for(const Ideal& Q, std::size_t index, const Ideal& H,
                                   const CpdsOptions& options) {
  const RingPtr& ring = Q.ring();
  Ideal P = radical(Q, options.primdec);
  auto tb = traced_buchberger(P.generators(), StabilityTrace(ring, H.generators()));
  if (tb.status == TraceStatus::split_needed) {
    throw InternalError("component prime has a condition ideal larger than the stratum");
  }
  std::vector<Monomial> lms;
  for (const auto& g : tb.basis.elements) {
    auto ld = leading_data(g);
    if (!ld.lm.is_one()) lms.push_back(ld.lm);
  }
  auto X = ring->indices_with(VarRole::variable);
  auto U = dimension_and_mis(lms, X).mis;
  auto Y = set_minus(X, U);

  HilbertCertificate cert;
  cert.component = index;
  for (auto u : U) cert.mis.push_back(ring->name(u));
  if (Y.empty()) {
    // P n K[A] = H and every variable is free: the certificate is linear.
    cert.element = Polynomial(ring);
    auto mp = local_minimal_polynomial(cert.element, P, Y);
    cert.t = mp.ring->name(mp.t);
    cert.minpoly = mp.poly.map_to(certificate_ring(ring, cert.t));
    return cert;
  }

  // Degree of the field extension over Frac(K[A]/H)(U).
  std::vector<std::size_t> rest = set_minus(
      [&] {
        std::vector<std::size_t> all(ring->size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
      }(),
      Y);
  RingPtr elim = ring->with_order(MonomialOrder(
      {{Y, BlockKind::grevlex}, {rest, BlockKind::grevlex}}, ring->size()));
  std::vector<Monomial> lm_y;
  for (const auto& g : P.groebner_in(elim).elements) {
    Monomial m = g.leading_monomial();
    Monomial projected;
    bool involves_y = false;
    for (auto y : Y) {
      if (m[y]) {
        projected.set(y, m[y]);
        involves_y = true;
      }
    }
    if (involves_y) lm_y.push_back(projected);
  }
  std::size_t D = standard_monomials(lm_y, Y).size();

  unsigned tried = 0;
  auto attempt = [&](const Polynomial& g) -> bool {
    auto mp = local_minimal_polynomial(g, P, Y);
    if (mp.poly.degree_in(mp.t) != D) return false;
    cert.element = g;
    cert.t = mp.ring->name(mp.t);
    cert.minpoly = mp.poly.map_to(certificate_ring(ring, cert.t));
    return true;
  };
  for (auto it = Y.rbegin(); it != Y.rend(); ++it) {
    if (++tried > options.primdec.candidate_budget) break;
    if (attempt(Polynomial::variable(ring, *it))) return cert;
  }
  if (Y.size() > 1) {
    for (int k = 1; tried < options.primdec.candidate_budget; ++k) {
      for (int sign : {1, -1}) {
        if (++tried > options.primdec.candidate_budget) break;
        Rational c = sign * k;
        Polynomial g(ring);
        Rational coef = 1;
        for (auto it = Y.rbegin(); it != Y.rend(); ++it) {
          g += Polynomial::variable(ring, *it) * coef;
          coef *= c;
        }
        if (attempt(g)) return cert;
      }
    }
  }
  throw ResourceLimit("no element in generic position within the candidate budget");
}

}  // namespace

RingPtr certificate_ring(const RingPtr& source, const std::string& t) {
  return prepend_variables(source, {t}, VarRole::variable, std::nullopt);
}

Cpds feasible_cpds(const Ideal& I, const CpdsOptions& options) {
  return run_cpds(I, Flavor::feasible, options);
}

Cpds minimal_feasible_cpds(const Ideal& I, const CpdsOptions& options) {
  return run_cpds(I, Flavor::minimal, options);
}

std::vector<HilbertCertificate> hilbert_subset(const Segment& segment,
                                               const CpdsOptions& options) {
  if (segment.cell.cells().size() != 1) {
    throw PreconditionError("hilbert certificates need a single-cell segment");
  }
  const Ideal& H = segment.cell.cells()[0].zero();
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < segment.components.size(); ++i) {
    if (!segment.components[i].is_unit()) targets.push_back(i);
  }
  std::vector<HilbertCertificate> out(targets.size());
  for_each_index(targets.size(), options.execution, [&](std::size_t n) {
    out[n] = certificate_for(segment.components[targets[n]], targets[n], H, options);
  });
  return out;
}

Cpds hilbert_cpds(const Ideal& I, const CpdsOptions& options) {
  Cpds out = run_cpds(I, Flavor::hilbert, options);
  for_each_index(out.segments.size(), options.execution, [&](std::size_t i) {
    out.segments[i].hilbert = hilbert_subset(out.segments[i], options);
  });
  return out;
}

bool hilbert_membership(const HilbertCertificate& cert, const Point& alpha,
                        const FactorOptions& options) {
  Polynomial f = specialize(cert.minpoly, alpha);
  const RingPtr& ring = f.ring();
  std::size_t t = ring->require_index(cert.t);
  if (f.degree_in(t) == 0) return false;
  std::vector<std::size_t> U;
  for (const auto& name : cert.mis) U.push_back(ring->require_index(name));
  return is_irreducible(f, t, U, options);
}

const char* to_string(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::pd2:
      return "pd2";
    case VerifyLevel::minimal:
      return "minimal";
    case VerifyLevel::primary:
      return "primary";
  }
  return "pd2";
}

std::optional<VerifyLevel> parse_verify_level(const std::string& text) {
  for (auto l : {VerifyLevel::pd2, VerifyLevel::minimal, VerifyLevel::primary}) {
    if (text == to_string(l)) return l;
  }
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.passed; });
}

std::string VerifyReport::to_string() const {
  std::string out = "point " + cpdskit::to_string(point) + ": " +
                    (passed() ? "pass" : "FAIL") + "\n";
  for (const auto& c : checks) {
    out += "  " + c.name + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

VerifyReport verify_segment(const Ideal& I, const Segment& segment,
                            const Point& alpha, VerifyLevel level,
                            const PrimdecOptions& options) {
  if (!segment.cell.contains(alpha)) {
    throw PreconditionError("point " + to_string(alpha) + " lies outside the segment cell");
  }
  VerifyReport report;
  report.point = alpha;
  RingPtr free = I.ring()->parameter_free();
  auto at_alpha = [&](const Ideal& J) {
    std::vector<Polynomial> gens;
    for (const auto& g : J.generators()) gens.push_back(specialize(g, alpha));
    return Ideal(free, gens);
  };
  Ideal target = at_alpha(I);
  std::vector<Ideal> comps;
  for (const auto& q : segment.components) comps.push_back(at_alpha(q));

  Ideal meet = comps.empty() ? Ideal::unit(free) : intersect(comps);
  bool pd2 = meet == target;
  report.checks.push_back({"pd2", pd2,
                           pd2 ? "" : "specialized ideal " + target.to_string() +
                                          " differs from the intersection " +
                                          meet.to_string()});
  if (level == VerifyLevel::pd2) return report;
  if (segment.is_unit()) {
    report.checks.push_back({"minimal", target.is_unit(), "unit segment"});
    return report;
  }

  std::size_t k = comps.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) others.push_back(comps[j]);
    }
    Ideal rest = others.empty() ? Ideal::unit(free) : intersect(others);
    bool ok = inclusion_test(rest, comps[i]).has_value();
    report.checks.push_back({"M-1[" + std::to_string(i) + "]", ok,
                             ok ? "" : "component " + comps[i].to_string() +
                                           " contains the others' intersection"});
  }
  std::vector<Ideal> radicals;
  for (const auto& c : comps) radicals.push_back(radical_or_trivial(c, options));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool ok = !(radicals[i] == radicals[j]);
      report.checks.push_back({"M-2[" + std::to_string(i) + "," + std::to_string(j) + "]",
                               ok, ok ? "" : "equal radicals " + radicals[i].to_string()});
    }
  }
  if (level == VerifyLevel::minimal) return report;

  for (std::size_t i = 0; i < k; ++i) {
    Primality p = comps[i].is_unit() ? Primality::neither : is_primary(comps[i], options);
    bool ok = p != Primality::neither;
    report.checks.push_back({"primary[" + std::to_string(i) + "]", ok,
                             (ok ? std::string(cpdskit::to_string(p)) + " "
                                 : std::string("not primary: ")) +
                                 comps[i].to_string()});
  }
  return report;
}

SampledVerification verify_sampled(const Cpds& cpds, VerifyLevel level,
                                   unsigned height_bound,
                                   std::size_t points_per_segment,
                                   Execution execution,
                                   const PrimdecOptions& options) {
  SampledVerification out;
  std::vector<std::pair<std::size_t, Point>> jobs;
  for (std::size_t s = 0; s < cpds.segments.size(); ++s) {
    std::vector<Point> points;
    for (const auto& cell : cpds.segments[s].cell.cells()) {
      if (points.size() >= points_per_segment) break;
      for (auto& p : rational_points(cell, height_bound,
                                     points_per_segment - points.size())) {
        points.push_back(std::move(p));
      }
    }
    if (points.empty()) ++out.segments_without_points;
    for (auto& p : points) jobs.emplace_back(s, std::move(p));
  }
  std::vector<VerifyReport> reports(jobs.size());
  for_each_index(jobs.size(), execution, [&](std::size_t n) {
    const auto& [s, p] = jobs[n];
    reports[n] = verify_segment(cpds.source, cpds.segments[s], p, level, options);
  });
  out.points_checked = jobs.size();
  for (auto& r : reports) {
    if (!r.passed()) out.failures.push_back(std::move(r));
  }
  return out;
}

}  // namespace cpdskit
