#include "cpdskit/factor.hpp"

#include <algorithm>

#include "cpdskit/errors.hpp"
#include "cpdskit/upoly.hpp"

namespace cpdskit {

Polynomial Factorization::expand(const RingPtr& ring) const {
  Polynomial out = Polynomial::constant(ring, unit);
  if (content) out *= content->map_to(ring);
  for (const auto& [f, e] : factors) out *= f.map_to(ring).pow(e);
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  Polynomial r = f;
  std::vector<Term> q;
  const Term& lg = g.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Rational c = lr.coef / lg.coef;
    Monomial m = lg.mono.quotient_of(lr.mono);
    r -= g.mul_term(c, m);
    q.push_back({c, m});
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g,
                            std::size_t var) {
  unsigned dg = g.degree_in(var);
  auto gc = coefficients_in(g, var);
  const Polynomial& lg = gc.back();
  Polynomial r = f;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    unsigned dr = r.degree_in(var);
    Polynomial lr = coefficients_in(r, var).back();
    Polynomial shift = Polynomial::monomial(f.ring(), 1, Monomial::variable(var, dr - dg));
    r = lg * r - lr * shift * g;
  }
  return r;
}

namespace {

Polynomial normalize_gcd(const Polynomial& f) {
  if (f.is_zero()) return f;
  return primitive_normalize(f);
}

std::size_t pick_variable(const Polynomial& f, const Polynomial& g) {
  auto sf = f.support();
  auto sg = g.support();
  std::size_t best = kMaxVars;
  for (auto v : sf) best = std::min(best, v);
  for (auto v : sg) best = std::min(best, v);
  return best;
}

Polynomial primitive_part_in(const Polynomial& f, std::size_t var) {
  auto q = divide_exact(f, content_in(f, var));
  return *q;
}

Integer max_norm(const Polynomial& f) {
  Integer m = 0;
  for (const auto& t : f.terms()) {
    Integer a = abs(t.coef.get_num());
    if (a > m) m = a;
  }
  return m;
}

Integer integer_content(const Polynomial& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  return g;
}

Polynomial divide_integer(const Polynomial& f, const Integer& c) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({Rational(t.coef / Rational(c)), t.mono});
  return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

// Inverse of evaluating var at x: symmetric x-adic digits of every integer
// coefficient become coefficients of powers of var.
Polynomial interpolate(Polynomial h, const Integer& x, std::size_t var) {
  const RingPtr& ring = h.ring();
  std::vector<Term> out;
  Integer half = x / 2;
  for (unsigned i = 0; !h.is_zero(); ++i) {
    if (i > 4096) throw ResourceLimit("interpolation degree exceeded");
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) digit.push_back({Rational(r), t.mono});
    }
    Polynomial g = Polynomial::from_sorted_terms(ring, digit);
    for (const auto& t : digit) {
      Monomial m = t.mono;
      m.set(var, static_cast<unsigned>(i));
      out.push_back({t.coef, m});
    }
    h -= g;
    h = divide_integer(h, x);
  }
  return Polynomial::from_terms(ring, std::move(out));
}

// Heuristic gcd of integer polynomials by evaluation at large integers and
// recursion on the remaining variables; nullopt when every attempt fails.
std::optional<Polynomial> heuristic_gcd(const Polynomial& f, const Polynomial& g,
                                        std::vector<std::size_t> vars) {
  const RingPtr& ring = f.ring();
  Integer cf = integer_content(f), cg = integer_content(g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (vars.empty()) return Polynomial::constant(ring, Rational(c));
  Polynomial a = divide_integer(f, cf), b = divide_integer(g, cg);
  std::size_t var = vars.back();
  vars.pop_back();
  if (!a.involves(var) && !b.involves(var)) {
    auto h = heuristic_gcd(a, b, vars);
    if (!h) return std::nullopt;
    return *h * Rational(c);
  }
  Integer na = max_norm(a), nb = max_norm(b);
  Integer x = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Polynomial ea = evaluate_partial(a, {{var, Rational(x)}});
    Polynomial eb = evaluate_partial(b, {{var, Rational(x)}});
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto h = heuristic_gcd(ea, eb, vars)) {
        Polynomial H = interpolate(*h, x, var);
        if (!H.is_zero()) {
          H = divide_integer(H, integer_content(H));
          if (divide_exact(a, H) && divide_exact(b, H)) return H * Rational(c);
        }
      }
    }
    // Next evaluation point, growing by roughly x^(1/4).
    Integer root;
    mpz_root(root.get_mpz_t(), x.get_mpz_t(), 4);
    x = (73794 * x * root) / 27011 + 1;
  }
  return std::nullopt;
}

}  // namespace

Polynomial content_in(const Polynomial& f, std::size_t var) {
  if (!f.involves(var)) return f;
  Polynomial g(f.ring());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = multivariate_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  if (f.is_zero()) return normalize_gcd(g);
  if (g.is_zero()) return normalize_gcd(f);
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), 1);
  if (f == g) return normalize_gcd(f);
  {
    Polynomial pf = primitive_normalize(f), pg = primitive_normalize(g);
    std::vector<std::size_t> vars = pf.support();
    for (auto v : pg.support()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    if (auto h = heuristic_gcd(pf, pg, vars)) return normalize_gcd(*h);
  }
  std::size_t v = pick_variable(f, g);
  if (!f.involves(v)) return multivariate_gcd(f, content_in(g, v));
  if (!g.involves(v)) return multivariate_gcd(content_in(f, v), g);
  Polynomial cf = content_in(f, v), cg = content_in(g, v);
  Polynomial c = multivariate_gcd(cf, cg);
  Polynomial a = primitive_normalize(*divide_exact(f, cf));
  Polynomial b = primitive_normalize(*divide_exact(g, cg));
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(v) > 0) {
    Polynomial r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_normalize(primitive_part_in(r, v));
  }
  if (!b.is_zero()) return normalize_gcd(c);
  return normalize_gcd(c * primitive_part_in(a, v));
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("squarefree part of zero");
  if (f.is_constant()) return Polynomial::constant(f.ring(), 1);
  Polynomial g = f;
  for (auto v : f.support()) {
    g = multivariate_gcd(g, derivative(f, v));
    if (g.is_constant()) break;
  }
  return primitive_normalize(*divide_exact(f, g));
}

Factorization squarefree_decompose(const Polynomial& f, std::size_t main) {
  if (f.is_zero()) throw PreconditionError("squarefree decomposition of zero");
  Factorization out;
  Polynomial c = content_in(f, main);
  if (!f.involves(main)) {
    auto [cc, s] = primitive_normalize_with_scale(f);
    out.unit = 1 / s;
    out.content = cc;
    return out;
  }
  Polynomial p = *divide_exact(f, c);
  Polynomial dp = derivative(p, main);
  Polynomial a0 = multivariate_gcd(p, dp);
  Polynomial b = *divide_exact(p, a0);
  Polynomial d = *divide_exact(dp, a0) - derivative(b, main);
  unsigned i = 1;
  while (b.degree_in(main) > 0) {
    Polynomial a = multivariate_gcd(b, d);
    Polynomial bn = *divide_exact(b, a);
    Polynomial cn = *divide_exact(d, a);
    d = cn - derivative(bn, main);
    if (a.degree_in(main) > 0) out.factors.push_back({primitive_normalize(a), i});
    b = std::move(bn);
    ++i;
  }
  Polynomial prod = Polynomial::constant(f.ring(), 1);
  for (const auto& [g, e] : out.factors) prod *= g.pow(e);
  auto [cc, s] = primitive_normalize_with_scale(c);
  out.content = cc;
  Polynomial q = *divide_exact(f, prod * cc);
  out.unit = *q.constant_value();
  return out;
}

namespace {

ZPoly to_zpoly(const Polynomial& f, std::size_t var) {
  auto g = primitive_normalize(f);
  ZPoly out(g.degree_in(var) + 1, 0);
  for (const auto& t : g.terms()) out[t.mono[var]] = t.coef.get_num();
  trim(out);
  return out;
}

Polynomial from_zpoly(const RingPtr& ring, const ZPoly& f, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) terms.push_back({Rational(f[i]), Monomial::variable(var, static_cast<unsigned>(i))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

void fix_unit(Factorization& out, const Polynomial& f) {
  Polynomial prod = Polynomial::constant(f.ring(), 1);
  if (out.content) prod *= *out.content;
  for (const auto& [g, e] : out.factors) prod *= g.pow(e);
  auto q = divide_exact(f, prod);
  if (!q || !q->is_constant() || q->is_zero()) {
    throw InternalError("factorization does not reconstruct its input");
  }
  out.unit = *q->constant_value();
}

void sort_factors(Factorization& out) {
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.total_degree() != y.first.total_degree()) {
      return x.first.total_degree() < y.first.total_degree();
    }
    return x.first.to_string() < y.first.to_string();
  });
}

void add_factor(Factorization& out, const Polynomial& g, unsigned e) {
  for (auto& [h, m] : out.factors) {
    if (h == g) {
      m += e;
      return;
    }
  }
  out.factors.push_back({g, e});
}

std::vector<Polynomial> factor_squarefree_univariate(const Polynomial& s, std::size_t var) {
  std::vector<Polynomial> out;
  for (const auto& z : zassenhaus(to_zpoly(s, var))) {
    out.push_back(primitive_normalize(from_zpoly(s.ring(), z, var)));
  }
  return out;
}

// Irreducible factors of s, primitive in main and squarefree.
std::vector<Polynomial> factor_squarefree_multi(const Polynomial& s, std::size_t main,
                                                const FactorOptions& options) {
  auto support = s.support();
  if (support.size() == 1) return factor_squarefree_univariate(s, main);

  std::vector<std::size_t> others;
  for (auto v : support) {
    if (v != main) others.push_back(v);
  }
  // Irreducible specialization of the other variables certifies
  // irreducibility when the main degree is kept.
  unsigned dmain = s.degree_in(main);
  Polynomial lcm = coefficients_in(s, main).back();
  static const int trial_values[] = {1, -1, 2, 3, -2, 5, 7, -3};
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    std::map<std::size_t, Rational> point;
    for (std::size_t k = 0; k < others.size(); ++k) {
      point[others[k]] = trial_values[(attempt * 3 + k * 5 + 1) % 8] + static_cast<int>(attempt);
    }
    if (evaluate_partial(lcm, point).is_zero()) continue;
    Polynomial img = evaluate_partial(s, point);
    if (img.degree_in(main) != dmain) continue;
    Polynomial g = multivariate_gcd(img, derivative(img, main));
    if (!g.is_constant()) continue;
    if (factor_squarefree_univariate(img, main).size() == 1) return {s};
  }

  std::vector<std::size_t> vars{main};
  vars.insert(vars.end(), others.begin(), others.end());
  std::vector<unsigned long> weight(vars.size()), bound(vars.size());
  unsigned long w = 1, image_degree = 0;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    weight[j] = w;
    bound[j] = s.degree_in(vars[j]);
    image_degree += bound[j] * w;
    w *= bound[j] + 1;
    if (w > (1ul << 40)) throw ResourceLimit("Kronecker substitution degree too large");
  }
  if (image_degree > options.max_kronecker) {
    throw ResourceLimit("Kronecker image degree " + std::to_string(image_degree) +
                        " exceeds bound " + std::to_string(options.max_kronecker));
  }
  auto substitute = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      unsigned long e = 0;
      for (std::size_t j = 0; j < vars.size(); ++j) e += t.mono[vars[j]] * weight[j];
      terms.push_back({t.coef, Monomial::variable(main, static_cast<unsigned>(e))});
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
  };
  auto invert = [&](const Polynomial& h) -> std::optional<Polynomial> {
    std::vector<Term> terms;
    for (const auto& t : h.terms()) {
      unsigned long e = t.mono[main];
      Monomial m;
      for (std::size_t j = vars.size(); j-- > 0;) {
        unsigned long digit = e / weight[j];
        if (digit > bound[j]) return std::nullopt;
        e -= digit * weight[j];
        m.set(vars[j], static_cast<unsigned>(digit));
      }
      terms.push_back({t.coef, m});
    }
    return Polynomial::from_terms(h.ring(), std::move(terms));
  };

  Factorization image = factor_univariate_Q(substitute(s));
  std::vector<Polynomial> items;
  for (const auto& [g, e] : image.factors) {
    for (unsigned k = 0; k < e; ++k) items.push_back(g);
  }
  std::vector<Polynomial> result;
  Polynomial rest = s;
  std::size_t explored = 0;
  for (std::size_t size = 1; 2 * size <= items.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (++explored > (1u << 18)) throw ResourceLimit("factor recombination budget exhausted");
      Polynomial h = Polynomial::constant(s.ring(), 1);
      for (auto i : idx) h *= items[i];
      auto cand = invert(h);
      if (cand && cand->degree_in(main) > 0) {
        auto q = divide_exact(rest, *cand);
        if (q) {
          result.push_back(primitive_normalize(*cand));
          rest = *q;
          std::vector<Polynomial> left;
          for (std::size_t k = 0, j = 0; k < items.size(); ++k) {
            if (j < size && idx[j] == k) {
              ++j;
            } else {
              left.push_back(items[k]);
            }
          }
          items = std::move(left);
          found = true;
          break;
        }
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == items.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!rest.is_constant()) result.push_back(primitive_normalize(rest));
  return result;
}

}  // namespace

Factorization factor_univariate_Q(const Polynomial& f) {
  auto support = f.support();
  if (support.size() > 1) throw PreconditionError("polynomial is not univariate");
  Factorization out;
  if (f.is_zero()) throw PreconditionError("factorization of zero");
  if (support.empty()) {
    out.unit = *f.constant_value();
    return out;
  }
  std::size_t v = support.front();
  auto sq = squarefree_decompose(f, v);
  for (const auto& [part, e] : sq.factors) {
    for (auto& g : factor_squarefree_univariate(part, v)) add_factor(out, g, e);
  }
  sort_factors(out);
  fix_unit(out, f);
  return out;
}

Factorization factor_multivariate(const Polynomial& f, const FactorOptions& options) {
  if (f.is_zero()) throw PreconditionError("factorization of zero");
  Factorization out;
  auto support = f.support();
  if (support.empty()) {
    out.unit = *f.constant_value();
    return out;
  }
  std::size_t main = support.front();
  Polynomial c = content_in(f, main);
  if (!c.is_constant()) {
    auto inner = factor_multivariate(c, options);
    for (const auto& [g, e] : inner.factors) add_factor(out, g, e);
  }
  Polynomial p = *divide_exact(f, c);
  auto sq = squarefree_decompose(p, main);
  for (const auto& [part, e] : sq.factors) {
    for (auto& g : factor_squarefree_multi(part, main, options)) add_factor(out, g, e);
  }
  sort_factors(out);
  fix_unit(out, f);
  return out;
}

Factorization factor_over_function_field(const Polynomial& f, std::size_t main,
                                         const std::vector<std::size_t>& U,
                                         const FactorOptions& options) {
  if (f.is_zero()) throw PreconditionError("factorization of zero");
  for (auto v : f.support()) {
    if (v != main && std::find(U.begin(), U.end(), v) == U.end()) {
      throw PreconditionError("variable " + f.ring()->name(v) +
                              " is neither the main variable nor in U");
    }
  }
  Factorization out;
  Polynomial c = content_in(f, main);
  auto [cc, s] = primitive_normalize_with_scale(c);
  out.content = cc;
  if (f.involves(main)) {
    Polynomial p = *divide_exact(f, c);
    auto sq = squarefree_decompose(p, main);
    for (const auto& [part, e] : sq.factors) {
      for (auto& g : factor_squarefree_multi(part, main, options)) add_factor(out, g, e);
    }
  }
  sort_factors(out);
  fix_unit(out, f);
  return out;
}

bool is_irreducible(const Polynomial& f, std::size_t main,
                    const std::vector<std::size_t>& U, const FactorOptions& options) {
  auto fac = factor_over_function_field(f, main, U, options);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace cpdskit
