#include "cpdskit/upoly.hpp"

#include <algorithm>
#include <random>

#include "cpdskit/errors.hpp"

namespace cpdskit {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw PreconditionError("division by the zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  const Integer& lb = b.back();
  for (int i = degree(r) - degree(b); i >= 0; --i) {
    const Integer& top = r[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c = top / lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    q[i] = c;
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly out = f;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

// ---- arithmetic in F_p[x], p < 2^31 ----

using u64 = std::uint64_t;
using FPoly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(FPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  FPoly reduce(const ZPoly& f) const {
    FPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    }
    trim(out);
    return out;
  }

  FPoly sub(const FPoly& a, const FPoly& b) const {
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
  }

  FPoly mul(const FPoly& a, const FPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        c[i + j] = (c[i + j] + a[i] * b[j]) % p;
      }
    }
    trim(c);
    return c;
  }

  // a = q*b + r.
  void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) const {
    r = a;
    trim(r);
    if (r.size() < b.size()) {
      q.clear();
      return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    for (int i = static_cast<int>(r.size() - b.size()); i >= 0; --i) {
      u64 c = mul(r[i + b.size() - 1], il);
      q[i] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = sub(r[i + j], mul(c, b[j]));
      }
    }
    trim(r);
    trim(q);
  }

  FPoly rem(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  FPoly quo(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return q;
  }

  FPoly monic(FPoly f) const {
    if (f.empty()) return f;
    u64 il = inv(f.back());
    for (auto& c : f) c = mul(c, il);
    return f;
  }

  FPoly gcd(FPoly a, FPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // Returns g = gcd(a,b) monic and s,t with s*a + t*b = g.
  FPoly xgcd(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FPoly q, r;
      divmod(r0, r1, q, r);
      FPoly s2 = sub(s0, mul(q, s1));
      FPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    s = s0;
    t = t0;
    return monic(r0);
  }

  FPoly derivative(const FPoly& f) const {
    if (f.size() <= 1) return {};
    FPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p);
    trim(d);
    return d;
  }

  // base^e mod m with e an arbitrary-precision exponent.
  FPoly powmod(const FPoly& base, const Integer& e, const FPoly& m) const {
    FPoly result{1}, b = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
    }
    return result;
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<FPoly> factor_mod_p(const Field& F, FPoly f, std::mt19937_64& rng) {
  std::vector<std::pair<FPoly, unsigned>> dd;
  FPoly x{0, 1};
  FPoly h = x;
  for (unsigned i = 1; 2 * i <= static_cast<unsigned>(f.size() - 1); ++i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    FPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      dd.push_back({g, i});
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) dd.push_back({f, static_cast<unsigned>(f.size() - 1)});

  std::vector<FPoly> out;
  for (auto& [g, d] : dd) {
    std::vector<FPoly> stack{g};
    while (!stack.empty()) {
      FPoly cur = stack.back();
      stack.pop_back();
      if (cur.size() - 1 == d) {
        out.push_back(cur);
        continue;
      }
      Integer pd;
      mpz_ui_pow_ui(pd.get_mpz_t(), F.p, d);
      Integer e = (pd - 1) / 2;
      while (true) {
        FPoly a(cur.size() - 1);
        for (auto& c : a) c = rng() % F.p;
        Field::trim(a);
        if (a.size() <= 1) continue;
        FPoly b = F.powmod(a, e, cur);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        Field::trim(b);
        FPoly g2 = F.gcd(b, cur);
        if (g2.size() > 1 && g2.size() < cur.size()) {
          stack.push_back(g2);
          stack.push_back(F.monic(F.quo(cur, g2)));
          break;
        }
      }
    }
  }
  return out;
}

// ---- arithmetic in (Z/m)[x] for Hensel lifting ----

struct ModRing {
  Integer m;

  Integer red(const Integer& a) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  ZPoly red(const ZPoly& f) const {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = red(f[i]);
    trim(out);
    return out;
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return red(c);
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return red(c);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const { return red(cpdskit::mul(a, b)); }
  // Division by a monic b.
  void divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
    r = red(a);
    if (r.size() < b.size()) {
      q.clear();
      return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(r.size() - b.size()); i >= 0; --i) {
      Integer c = r[i + b.size() - 1];
      q[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = red(r[i + j] - c * b[j]);
    }
    trim(r);
    trim(q);
  }
};

ZPoly lift_poly(const FPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Integer(static_cast<unsigned long>(f[i]));
  return out;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Produces the same data modulo m2 (m2 divides m^2).
void hensel_step(const ModRing& R2, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s,
                 ZPoly& t) {
  ZPoly e = R2.sub(f, R2.mul(g, h));
  ZPoly q, r;
  R2.divmod(R2.mul(s, e), h, q, r);
  ZPoly g2 = R2.add(g, R2.add(R2.mul(t, e), R2.mul(q, g)));
  ZPoly h2 = R2.add(h, r);
  ZPoly b = R2.sub(R2.add(R2.mul(s, g2), R2.mul(t, h2)), ZPoly{1});
  ZPoly c, d;
  R2.divmod(R2.mul(s, b), h2, c, d);
  s = R2.sub(s, d);
  t = R2.sub(t, R2.add(R2.mul(t, b), R2.mul(c, g2)));
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod(factors) mod p to modulus M = p^k. Returns monic
// lifted factors modulo M in the same order.
std::vector<ZPoly> multifactor_lift(const Field& F, const ZPoly& f,
                                    const std::vector<FPoly>& factors,
                                    const Integer& M) {
  if (factors.size() == 1) {
    ModRing RM{M};
    Integer inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    ZPoly g = RM.red(f);
    for (auto& c : g) c = RM.red(c * inv_lc);
    return {g};
  }
  std::size_t half = factors.size() / 2;
  std::vector<FPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  FPoly gl{F.p > 0 ? static_cast<u64>(mpz_fdiv_ui(f.back().get_mpz_t(), F.p)) : 0};
  for (const auto& l : left) gl = F.mul(gl, l);
  FPoly hr{1};
  for (const auto& r : right) hr = F.mul(hr, r);
  FPoly s0, t0;
  F.xgcd(gl, hr, s0, t0);
  ZPoly g = lift_poly(gl), h = lift_poly(hr), s = lift_poly(s0), t = lift_poly(t0);
  Integer m = F.p;
  while (m < M) {
    Integer m2 = m * m;
    if (m2 > M) m2 = M;
    hensel_step(ModRing{m2}, f, g, h, s, t);
    m = m2;
  }
  // g has leading coefficient lc(f) mod M; it is the target for the left half.
  auto lg = multifactor_lift(F, g, left, M);
  auto rh = multifactor_lift(F, h, right, M);
  lg.insert(lg.end(), rh.begin(), rh.end());
  return lg;
}

ZPoly symmetric(const ZPoly& f, const Integer& M) {
  ZPoly out = f;
  Integer half = M / 2;
  for (auto& c : out) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& input) {
  ZPoly f = primitive_part(input);
  int n = degree(f);
  if (n < 1) throw PreconditionError("zassenhaus needs a nonconstant polynomial");
  if (n == 1) return {f};

  // Smallest prime >= 5 not dividing lc with squarefree image.
  Field F{5};
  for (u64 p = 5;; ++p) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    Field cand{p};
    FPoly fp = cand.reduce(f);
    FPoly g = cand.gcd(fp, cand.derivative(fp));
    if (g.size() == 1) {
      F = cand;
      break;
    }
    if (p > 100000) throw InternalError("no good prime found for factorization");
  }
  std::mt19937_64 rng(0x5eed);
  std::vector<FPoly> modular = factor_mod_p(F, F.monic(F.reduce(f)), rng);
  if (modular.size() == 1) return {f};

  // Coefficient bound for factors of lc*f: 2^n * ||f||_2 * |lc|.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound = 2 * bound + 1;
  Integer M = F.p;
  while (M <= bound) M *= F.p;

  std::vector<ZPoly> lifted = multifactor_lift(F, f, modular, M);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;
  ModRing RM{M};
  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{f.back()};
      for (auto i : idx) cand = RM.mul(cand, lifted[remaining[i]]);
      cand = primitive_part(symmetric(cand, M));
      ZPoly q;
      if (divide_exact(f, cand, q)) {
        result.push_back(cand);
        f = q;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0, j = 0; k < remaining.size(); ++k) {
          if (j < size && idx[j] == k) {
            ++j;
          } else {
            rest.push_back(remaining[k]);
          }
        }
        remaining = std::move(rest);
        found = true;
        break;
      }
      // Next combination.
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == remaining.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (degree(f) > 0) result.push_back(primitive_part(f));
  return result;
}

}  // namespace cpdskit
