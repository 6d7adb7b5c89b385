#include "cpdskit/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "cpdskit/errors.hpp"

namespace cpdskit {

namespace {

void sort_terms(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return order.greater(x.mono, y.mono);
  });
}

// Sorts, merges equal monomials and drops zeros.
void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  sort_terms(ring, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({c, Monomial()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw PreconditionError("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Rational(1), Monomial::variable(index)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c,
                                const Monomial& m) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  canonicalize(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_[0].coef;
  return std::nullopt;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

bool Polynomial::uses_only(const std::vector<bool>& mask) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i] && !(i < mask.size() && mask[i])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (degree_in(i)) out.push_back(i);
  }
  return out;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_ || !same_ring(ring_, other.ring_)) {
    throw RingMismatch("polynomials belong to different rings");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  if (other.terms_.empty()) return *this;
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order.compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + other.terms_[j].coef;
      if (s != 0) out.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].coef, b.terms_[0].mono);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].coef, a.terms_[0].mono);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      acc[x.mono * y.mono] += x.coef * y.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), m});
  }
  sort_terms(*a.ring_, terms);
  return Polynomial::from_sorted_terms(a.ring_, std::move(terms));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coef * c, t.mono * m});
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  a.check_ring(b);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (ring_ == target) return *this;
  std::vector<std::size_t> remap(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto idx = target->index_of(ring_->name(i));
    if (!idx) {
      if (degree_in(i)) {
        throw RingMismatch("variable '" + ring_->name(i) +
                           "' missing in target ring");
      }
      remap[i] = kMaxVars;
    } else {
      remap[i] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i]) m.set(remap[i], t.mono[i]);
    }
    terms.push_back({t.coef, m});
  }
  return from_terms(target, std::move(terms));
}

Polynomial Polynomial::substitute(std::size_t var,
                                  const Polynomial& value) const {
  check_ring(value);
  unsigned d = degree_in(var);
  if (d == 0) return *this;
  std::vector<Polynomial> powers{constant(ring_, 1)};
  for (unsigned k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  Polynomial out(ring_);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned k = m[var];
    m.set(var, 0);
    buckets[k].push_back({t.coef, m});
  }
  for (unsigned k = 0; k <= d; ++k) {
    if (buckets[k].empty()) continue;
    out += from_terms(ring_, std::move(buckets[k])) * powers[k];
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += cpdskit::to_string(c);
    } else {
      if (c != 1) out += cpdskit::to_string(c) + "*";
      out += ring_->format(t.mono);
    }
  }
  return out;
}

std::string to_string(const Point& point) {
  std::string out;
  for (const auto& [name, value] : point) {
    if (!out.empty()) out += ',';
    out += name + "=" + to_string(value);
  }
  return out;
}

Polynomial specialize(const Polynomial& f, const Point& alpha) {
  const auto& ring = *f.ring();
  RingPtr target = ring.parameter_free();
  std::vector<std::size_t> remap(ring.size(), kMaxVars);
  std::vector<Rational> values(ring.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (ring.is_parameter(i)) {
      auto it = alpha.find(ring.name(i));
      if (it == alpha.end()) {
        throw PreconditionError("no value given for parameter '" +
                                ring.name(i) + "'");
      }
      values[i] = it->second;
    } else {
      remap[i] = next++;
    }
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    Monomial m;
    for (std::size_t i = 0; i < ring.size() && c != 0; ++i) {
      if (!t.mono[i]) continue;
      if (ring.is_parameter(i)) {
        Rational p = 1;
        for (unsigned k = 0; k < t.mono[i]; ++k) p *= values[i];
        c *= p;
      } else {
        m.set(remap[i], t.mono[i]);
      }
    }
    if (c != 0) terms.push_back({c, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial evaluate_partial(const Polynomial& f,
                            const std::map<std::size_t, Rational>& values) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    Monomial m = t.mono;
    for (const auto& [var, value] : values) {
      unsigned e = m[var];
      if (!e) continue;
      Rational p = 1;
      for (unsigned k = 0; k < e; ++k) p *= value;
      c *= p;
      m.set(var, 0);
    }
    if (c != 0) terms.push_back({c, m});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Rational evaluate(const Polynomial& f,
                  const std::map<std::size_t, Rational>& values) {
  auto p = evaluate_partial(f, values);
  auto c = p.constant_value();
  if (!c) throw PreconditionError("evaluation point misses a variable of " + f.to_string());
  return *c;
}

std::vector<std::pair<Monomial, Polynomial>> coefficients_over_parameters(
    const Polynomial& f) {
  const auto& ring = *f.ring();
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
  std::vector<Monomial> keys;
  for (const auto& t : f.terms()) {
    auto [x, a] = ring.split(t.mono);
    auto [it, inserted] = groups.try_emplace(x);
    if (inserted) keys.push_back(x);
    it->second.push_back({t.coef, a});
  }
  const auto& order = ring.order();
  // Under a block order with X >> A the parameter part never decides a
  // comparison between different X-parts, so comparing x-parts alone is the
  // restricted order.
  std::sort(keys.begin(), keys.end(), [&](const Monomial& p, const Monomial& q) {
    return order.greater(p, q);
  });
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    out.emplace_back(k, Polynomial::from_terms(f.ring(), std::move(groups[k])));
  }
  return out;
}

LeadingData leading_data(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("leading data of the zero polynomial");
  auto coeffs = coefficients_over_parameters(f);
  auto& [lm, lc] = coeffs.front();
  return {lc, lm, lc.mul_term(1, lm)};
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  unsigned d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned k = m[var];
    m.set(var, 0);
    buckets[k].push_back({t.coef, m});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
  return out;
}

Rational content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (f.leading_coefficient() < 0) c = -c;
  return c;
}

std::pair<Polynomial, Rational> primitive_normalize_with_scale(
    const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  Rational scale = 1 / content(f);
  return {f * scale, scale};
}

Polynomial primitive_normalize(const Polynomial& f) {
  return primitive_normalize_with_scale(f).first;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->size()) throw PreconditionError("unknown variable index");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    terms.push_back({t.coef * e, m});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial derivative(const Polynomial& f, const std::string& var) {
  return derivative(f, f.ring()->require_index(var));
}

}  // namespace cpdskit
