#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpdskit/errors.hpp"
#include "cpdskit/factor.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::set<std::string> factor_strings(const Factorization& f) {
  std::set<std::string> out;
  for (const auto& [g, e] : f.factors) out.insert(g.to_string() + "^" + std::to_string(e));
  return out;
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  Env e({"a"}, {"t", "y"});
  auto d1 = squarefree_decompose(e("t^3 - t^2"), 0);
  CHECK(factor_strings(d1) == std::set<std::string>{"t^2", "t - 1^1"});
  CHECK(d1.expand(e.ring) == e("t^3 - t^2"));
  auto d2 = squarefree_decompose(e("t^2 + 2*t + 1"), 0);
  CHECK(factor_strings(d2) == std::set<std::string>{"t + 1^2"});
  auto d3 = squarefree_decompose(e("y^2 + a*y"), 1);
  REQUIRE(d3.factors.size() == 1);
  CHECK(d3.factors[0].second == 1);
  CHECK_THROWS_AS(squarefree_decompose(Polynomial(e.ring), 0), PreconditionError);
}

TEST_CASE("univariate factorization over Q") {
  Env e({}, {"x"});
  CHECK(factor_strings(factor_univariate_Q(e("x^2 - 1"))) ==
        std::set<std::string>{"x - 1^1", "x + 1^1"});
  CHECK(factor_univariate_Q(e("x^2 - 2")).factors.size() == 1);
  CHECK(factor_strings(factor_univariate_Q(e("x^2 + 2*x + 1"))) ==
        std::set<std::string>{"x + 1^2"});
  auto f = factor_univariate_Q(e("x^8 + x^7 - x^5 - x^4 - x^3 + x + 1"));
  CHECK(f.factors.size() == 1);
  auto g = factor_univariate_Q(e("x^4 + 1"));
  CHECK(g.factors.size() == 1);
  auto h = factor_univariate_Q(e("6*x^6 - 6"));
  CHECK(h.factors.size() == 4);
  CHECK(h.expand(e.ring) == e("6*x^6 - 6"));
}

TEST_CASE("multivariate gcd") {
  Env e({"a"}, {"x", "y"});
  CHECK(multivariate_gcd(e("x^2 - 1"), e("x - 1")) == e("x - 1"));
  CHECK(multivariate_gcd(e("a*x"), e("a*y")) == e("a"));
  CHECK(multivariate_gcd(e("-2*x*y + 4"), Polynomial(e.ring)) == e("x*y - 2"));
  CHECK(multivariate_gcd(e("(x+y+a)^2*(x-a*y)"), e("(x+y+a)*(x*y-1)")) == e("x+y+a"));
}

TEST_CASE("factorization over a rational function field") {
  Env e({"a"}, {"y", "x1", "x3", "t"});
  auto f = factor_over_function_field(e("y^2 + a*y"), 0, {4});
  CHECK(factor_strings(f) == std::set<std::string>{"y^1", "y + a^1"});
  // t^2 - x3 has no square root of x3 in Q(x3).
  CHECK(is_irreducible(e("t^2 - x3"), 3, {2}));
  CHECK(is_irreducible(e("x1^2 - a"), 1, {4}));
}

TEST_CASE("irreducibility") {
  Env e({}, {"x"});
  CHECK(is_irreducible(e("x^2 - 2"), 0, {}));
  CHECK_FALSE(is_irreducible(e("x^2 - 1"), 0, {}));
  CHECK_FALSE(is_irreducible(e("(x^2 + 1)^2"), 0, {}));
}

TEST_CASE("the first displayed element specialized at a1 = a2 = 1 splits in three") {
  Env e({"a2", "a1"}, {"x2", "x1", "x3"});
  auto g1 = e("x1^3 - x1^2*x3^2 + x1^2*x3*a1 + x1^2*a2 - x1*x3^2*a1 + x3^4*a1 - x3^3*a1^2 - x3^2*a2");
  auto g = specialize(g1, point({{"a1", 1}, {"a2", 1}}));
  Env free(g.ring());
  auto x1 = *g.ring()->index_of("x1");
  auto x3 = *g.ring()->index_of("x3");
  auto f = factor_over_function_field(g, x1, {x3});
  CHECK(f.factors.size() == 3);
  CHECK(f.expand(g.ring()) == g);
}

TEST_CASE("Kronecker bound is enforced") {
  Env e({}, {"x", "u", "v"});
  FactorOptions small;
  small.max_kronecker = 4;
  CHECK_THROWS_AS(factor_over_function_field(e("x^2 - u^4*v^4"), 0, {1, 2}, small),
                  ResourceLimit);
}
