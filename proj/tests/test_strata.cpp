#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpdskit/groebner.hpp"
#include "cpdskit/strata.hpp"
#include "support.hpp"

using namespace testing;

namespace {

LocallyClosedSet cell(const Env& p, std::initializer_list<const char*> zero,
                      std::initializer_list<const char*> nonzero) {
  return LocallyClosedSet(p.ideal(zero), p.ideal(nonzero));
}

}  // namespace

TEST_CASE("CGS of the running example") {
  Env e({"a1"}, {"x1", "x2"});
  auto segs = suzuki_sato_cgs(e.polys({"a1*x1^2 + x2", "x2^2"}));
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].cell.to_string() == "Q \\ V(a1)");
  CHECK(format_ideal(segs[0].basis) == "<x1^2*a1 + x2, x2^2>");
  CHECK(segs[1].cell.to_string() == "V(a1)");
  CHECK(format_ideal(segs[1].basis) == "<x2>");
}

TEST_CASE("CGS without parameters and with a unit split") {
  Env f({}, {"x", "y"});
  auto segs = suzuki_sato_cgs(f.polys({"x^2 - 1", "x*y - 1"}));
  REQUIRE(segs.size() == 1);
  CHECK(format_ideal(segs[0].basis) == "<x - y, y^2 - 1>");

  Env e({"a"}, {"x"});
  auto lin = suzuki_sato_cgs(e.polys({"a*x"}));
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].cell.to_string() == "Q \\ V(a)");
  CHECK(format_ideal(lin[0].basis) == "<x*a>");
  CHECK(lin[1].cell.to_string() == "V(a)");
  CHECK(lin[1].basis.empty());
}

TEST_CASE("CGS segments specialize to Groebner bases and cover the space") {
  Env e({"a", "b"}, {"x", "y"});
  auto F = e.polys({"a*x^2 + b*y - 1", "b*x*y - a", "x - y^2"});
  auto segs = suzuki_sato_cgs(F);
  RingPtr params = e.ring->parameter_ring();
  ConstructibleSet covered(params);
  for (const auto& s : segs) covered.add(s.cell);
  CHECK(complement(covered).is_empty_over_C());
  auto free = e.ring->parameter_free();
  int checked = 0;
  for (const auto& s : segs) {
    for (const auto& alpha : rational_points(s.cell, 3, 4)) {
      std::vector<Polynomial> sf, sb;
      for (const auto& f : F) sf.push_back(specialize(f, alpha));
      for (const auto& g : s.basis) sb.push_back(specialize(g, alpha));
      CHECK(buchberger(free, sf) == buchberger(free, sb));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("constructible set algebra") {
  Env p({"a1", "a2"}, {});
  auto c = ConstructibleSet::single(cell(p, {"a1"}, {"a2"}));
  auto full = ConstructibleSet::full(p.ring);
  CHECK(set_difference(set_intersection(c, full), c).is_empty_over_C());
  CHECK(set_difference(c, set_intersection(c, full)).is_empty_over_C());
  CHECK(c.contains(point({{"a1", 0}, {"a2", 1}})));
  CHECK_FALSE(c.contains(point({{"a1", 0}, {"a2", 0}})));
  CHECK(set_difference(c, c).is_empty_over_C());
  CHECK_FALSE(set_union(c, full).is_empty_over_C());
}

TEST_CASE("set algebra agrees with pointwise membership") {
  Env p({"a", "b"}, {});
  auto A = ConstructibleSet::single(cell(p, {"a*b"}, {"a - 1"}));
  auto B = ConstructibleSet::single(cell(p, {}, {"a + b"}));
  B.add(cell(p, {"b - 2"}, {"a^2 - 4"}));
  auto U = set_union(A, B);
  auto I = set_intersection(A, B);
  auto D = set_difference(A, B);
  auto C = complement(A);
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      Point x = point({{"a", a}, {"b", b}});
      bool in_a = A.contains(x);
      bool in_b = B.contains(x);
      CHECK(U.contains(x) == (in_a || in_b));
      CHECK(I.contains(x) == (in_a && in_b));
      CHECK(D.contains(x) == (in_a && !in_b));
      CHECK(C.contains(x) == !in_a);
    }
  }
}

TEST_CASE("emptiness over C") {
  Env p({"a"}, {});
  CHECK_FALSE(cell(p, {"a^4 - 1"}, {"a^2 - 1"}).is_empty_over_C());
  CHECK(cell(p, {"a^2 + 1"}, {"a^2 + 1"}).is_empty_over_C());
  CHECK_FALSE(cell(p, {}, {"1"}).is_empty_over_C());
}

TEST_CASE("cell membership") {
  Env p({"a", "b"}, {});
  CHECK(cell(p, {}, {"a*b"}).contains(point({{"a", 1}, {"b", 1}})));
  CHECK_FALSE(cell(p, {"a"}, {"a", "b"}).contains(point({{"a", 0}, {"b", 0}})));
  CHECK(cell(p, {"a"}, {"a", "b"}).contains(point({{"a", 0}, {"b", 3}})));
}

TEST_CASE("printing of sets") {
  Env p({"a", "b"}, {});
  CHECK(cell(p, {}, {"a*b"}).to_string() == "Q^2 \\ V(a*b)");
  CHECK(cell(p, {"a"}, {"b"}).to_string() == "V(a) \\ V(a, b)");
  CHECK(ConstructibleSet(p.ring).to_string() == "{}");
}

TEST_CASE("rational sample points") {
  Env p({"a", "b"}, {});
  auto origin = sample_rational_point(ConstructibleSet::full(p.ring), 5);
  REQUIRE(origin.has_value());
  CHECK(*origin == point({{"a", 0}, {"b", 0}}));
  Env q({"a"}, {});
  CHECK_FALSE(sample_rational_point(cell(q, {"a^4 - 1"}, {"a^2 - 1"}), 50).has_value());
  auto s = sample_rational_point(cell(p, {}, {"a*b"}), 1);
  REQUIRE(s.has_value());
  for (const auto& [name, v] : *s) CHECK((v == 1 || v == -1));
  auto on_curve = sample_rational_point(cell(p, {"a^2 - b^3"}, {"a"}), 9);
  REQUIRE(on_curve.has_value());
  CHECK((*on_curve).at("a") * (*on_curve).at("a") ==
        (*on_curve).at("b") * (*on_curve).at("b") * (*on_curve).at("b"));
}

TEST_CASE("height ordering") {
  auto qs = rationals_up_to_height(2);
  REQUIRE(qs.size() == 7);
  CHECK(to_string(qs[0]) == "0");
  CHECK(to_string(qs[1]) == "1");
  CHECK(to_string(qs[2]) == "-1");
  for (const auto& q : qs) CHECK(height(q) <= 2);
}
