#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpdskit/cpds.hpp"
#include "cpdskit/errors.hpp"
#include "examples.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<PrimaryComponent> components_of(const Env& e,
                                            std::initializer_list<std::initializer_list<const char*>> qs) {
  std::vector<PrimaryComponent> out;
  for (const auto& gens : qs) {
    Ideal q = e.ideal(gens);
    out.push_back({q, radical(q)});
  }
  return out;
}

std::set<std::string> segment_radicals(const Segment& s) {
  std::set<std::string> out;
  for (const auto& q : s.components) out.insert(radical(q).to_string());
  return out;
}

std::string cell_text(const Segment& s) { return s.cell.to_string(); }

const Segment* find_segment(const Cpds& c, const std::string& cell) {
  for (const auto& s : c.segments) {
    if (cell_text(s) == cell) return &s;
  }
  return nullptr;
}

Env params_env(const Env& e) { return Env(e.ring->parameter_ring()); }

}  // namespace

TEST_CASE("filtered decomposition keeps components with the stratum's condition") {
  Env e({"a1", "a2"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2", "a2*x1*x2", "a1"});
  auto Q = components_of(e, {{"x1", "a1"}, {"x1", "a1", "a2"}, {"x1^2", "x2", "a1"}});
  auto kept = filtered_pd(I, Q);
  std::vector<Ideal> ideals;
  for (const auto& c : kept) ideals.push_back(c.primary);
  CHECK(ideal_set(ideals) == std::set<std::string>{e.ideal({"x1", "a1"}).canonical().to_string(),
                                                   e.ideal({"x1^2", "x2", "a1"}).canonical().to_string()});
}

TEST_CASE("filtered decomposition of the generic stratum") {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  auto kept = filtered_pd(I, primary_decompose(I));
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].primary == e.ideal({"x1^2 - a", "x2"}));
}

TEST_CASE("filtered decomposition of a single component") {
  Env e({"a"}, {"x"});
  Ideal I = e.ideal({"x^2 - a"});
  auto Q = components_of(e, {{"x^2 - a"}});
  auto kept = filtered_pd(I, Q);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].primary == I);
}

TEST_CASE("filtered decomposition rejects an empty result") {
  Env e({"a"}, {"x"});
  Ideal I = e.ideal({"x"});
  auto Q = components_of(e, {{"x", "a"}});
  CHECK_THROWS_AS(filtered_pd(I, Q), InternalError);
}

TEST_CASE("pd2 stability of the embedded example") {
  Env e({"a1"}, {"x1", "x2"});
  Env p = params_env(e);
  Ideal I = e.ideal({"(x1 + a1)*x1^2", "(x1 + a1)*x2"});
  auto Q = components_of(e, {{"x1 + a1"}, {"x1^2", "x2"}});
  Ideal J = pd2_stability(I, Q, Ideal::zero(p.ring));
  CHECK(radical(J) == p.ideal({"a1"}));
}

TEST_CASE("pd2 stability of the generic stratum of the two-parameter example") {
  Env e({"a", "b"}, {"x1", "x2"});
  Env p = params_env(e);
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Ideal J = pd2_stability(I, primary_decompose(I), Ideal::zero(p.ring));
  CHECK(radical(J) == p.ideal({"a*b"}));
}

TEST_CASE("pd2 stability of a single component is the unit ideal") {
  Env e({"a"}, {"x"});
  Env p = params_env(e);
  Ideal I = e.ideal({"a*x - 1"});
  Ideal J = pd2_stability(I, components_of(e, {{"a*x - 1"}}), Ideal::zero(p.ring));
  CHECK(J.is_unit());
}

TEST_CASE("pd2 trace finds the collision of two linear components") {
  Env e({"a"}, {"x"});
  Env p = params_env(e);
  Ideal J = pd2_trace({e.ideal({"x - a"}), e.ideal({"x"})}, Ideal::zero(p.ring));
  CHECK(radical(J) == p.ideal({"a"}));
}

TEST_CASE("noninclusion certificates") {
  SUBCASE("remainder with a constant coefficient") {
    Env e({"a1"}, {"x1", "x2"});
    Env p = params_env(e);
    Ideal J = noninclusion_certificate(e.ideal({"x1^2", "x2"}), e.ideal({"x1 + a1"}),
                                       Ideal::zero(p.ring));
    CHECK(J.is_unit());
    for (long v : {-2, -1, 0, 1, 2}) {
      Point alpha = point({{"a1", v}});
      Ideal s2(e.ring->parameter_free(), {specialize(e("x1 + a1"), alpha)});
      CHECK_FALSE(s2.contains(specialize(e("x2"), alpha)));
    }
  }
  SUBCASE("stratum with a nonzero condition ideal") {
    Env e({"a"}, {"x"});
    Env p = params_env(e);
    Ideal J = noninclusion_certificate(e.ideal({"x"}), e.ideal({"x^2", "a"}), p.ideal({"a"}));
    CHECK(J.is_unit());
  }
  SUBCASE("remainder vanishing on a subvariety") {
    Env e({"a"}, {"x", "y"});
    Env p = params_env(e);
    Ideal J = noninclusion_certificate(e.ideal({"a*y"}), e.ideal({"x"}), Ideal::zero(p.ring));
    CHECK(radical(J) == p.ideal({"a"}));
  }
  SUBCASE("contained ideals are rejected") {
    Env e({"a"}, {"x"});
    Env p = params_env(e);
    CHECK_THROWS_AS(noninclusion_certificate(e.ideal({"x^2"}), e.ideal({"x"}), Ideal::zero(p.ring)),
                    PreconditionError);
  }
}

TEST_CASE("minimality stability of the embedded example") {
  Env e({"a1"}, {"x1", "x2"});
  Env p = params_env(e);
  auto Q = components_of(e, {{"x1 + a1"}, {"x1^2", "x2"}});
  // Both conditions already hold at a1 = 0, so any J with V(J) inside V(a1)
  // is acceptable.
  Ideal J = minimality_stability(Q, Ideal::zero(p.ring));
  CHECK(radical_contains(J, p("a1")));
}

TEST_CASE("minimality stability of a single component is trivial") {
  Env e({"a"}, {"x"});
  Env p = params_env(e);
  CHECK(minimality_stability(components_of(e, {{"x^2 - a"}}), Ideal::zero(p.ring)).is_unit());
}

TEST_CASE("feasible CPDS of the two-parameter example") {
  Env e({"a", "b"}, {"x1", "x2"});
  Env p = params_env(e);
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Cpds c = feasible_cpds(I);
  CHECK(c.flavor == Flavor::feasible);
  CHECK(complement(c.covered()).is_empty_over_C());

  const Segment* generic = find_segment(c, "Q^2 \\ V(a*b)");
  REQUIRE(generic != nullptr);
  CHECK(segment_radicals(*generic) == std::set<std::string>{"<x1^2 - a, x2>"});
  const Segment* vb = find_segment(c, "V(b)");
  REQUIRE(vb != nullptr);
  CHECK(segment_radicals(*vb) == std::set<std::string>{"<x1^2 - a, b>"});
  const Segment* va = find_segment(c, "V(a) \\ V(a, b)");
  REQUIRE(va != nullptr);
  CHECK(segment_radicals(*va) == std::set<std::string>{"<x1, a>", "<x1, x2, a>"});
  // Storing the filtered list removes <x1^2, b> from V(a), so the origin gets
  // a segment of its own.
  const Segment* origin = find_segment(c, "V(a, b)");
  REQUIRE(origin != nullptr);
  CHECK(c.segments.size() == 4);

  auto v = verify_sampled(c, VerifyLevel::pd2, 3, 4);
  CHECK(v.points_checked > 0);
  CHECK(v.passed());
}

TEST_CASE("feasible CPDS of the unit ideal is empty") {
  Env e({"a"}, {"x"});
  Cpds c = feasible_cpds(e.ideal({"1"}));
  CHECK(c.segments.empty());
  CHECK(c.to_string() == "{}");
}

TEST_CASE("feasible CPDS of cyclic(4) with parameter c0") {
  Env e = cyclic_ring();
  Env p = params_env(e);
  Ideal I = cyclic4(e);
  Cpds c = feasible_cpds(I);
  CHECK(c.segments.size() == 5);
  CHECK(complement(c.covered()).is_empty_over_C());
  const Segment* generic = find_segment(c, "Q \\ V(c0^5 - c0)");
  REQUIRE(generic != nullptr);
  CHECK(generic->components.size() == 2);
  for (const char* cell : {"V(c0)", "V(c0 + 1)", "V(c0 - 1)", "V(c0^2 + 1)"}) {
    CHECK_MESSAGE(find_segment(c, cell) != nullptr, cell);
  }
  REQUIRE(find_segment(c, "V(c0)") != nullptr);
  CHECK(find_segment(c, "V(c0)")->is_unit());

  auto report = verify_segment(I, *generic, point({{"c0", 2}}), VerifyLevel::pd2);
  CHECK(report.passed());
}

TEST_CASE("minimal feasible CPDS of I1") {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Cpds c = minimal_feasible_cpds(I);
  CHECK(c.flavor == Flavor::minimal);
  REQUIRE(c.segments.size() == 4);
  struct Expected {
    const char* cell;
    std::set<std::string> radicals;
    std::vector<const char*> intersection;
  };
  std::vector<Expected> expected = {
      {"Q^2 \\ V(a*b)", {"<x1^2 - a, x2>"}, {"x1^2 - a", "x2"}},
      {"V(a) \\ V(a, b)", {"<x1, a>", "<x1, x2, a>"}, {"x1^2", "x1*x2", "a"}},
      {"V(a, b)", {"<x1, a, b>"}, {"x1^2", "a", "b"}},
      {"V(b)", {"<x1^2 - a, b>"}, {"x1^2 - a", "b"}},
  };
  for (const auto& ex : expected) {
    CAPTURE(ex.cell);
    const Segment* s = find_segment(c, ex.cell);
    REQUIRE(s != nullptr);
    CHECK(segment_radicals(*s) == ex.radicals);
    Ideal want(e.ring, [&] {
      std::vector<Polynomial> gens;
      for (const char* g : ex.intersection) gens.push_back(e(g));
      return gens;
    }());
    CHECK(intersect(s->components) == want);
  }
  auto v = verify_sampled(c, VerifyLevel::minimal, 3, 4);
  CHECK(v.points_checked > 0);
  CHECK(v.passed());
}

TEST_CASE("minimal feasible CPDS without parameters") {
  Env e({}, {"x", "y"});
  Ideal I = e.ideal({"x^2", "x*y"});
  Cpds c = minimal_feasible_cpds(I);
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].cell.cells().size() == 1);
  CHECK(c.segments[0].components.size() == 2);
  CHECK(intersect(c.segments[0].components) == I);
}

TEST_CASE("minimal feasible CPDS of the embedded example") {
  Env e({"a1"}, {"x1", "x2"});
  Ideal I = e.ideal({"(x1 + a1)*x1^2", "(x1 + a1)*x2"});
  Cpds c = minimal_feasible_cpds(I);
  const Segment* generic = find_segment(c, "Q \\ V(a1)");
  REQUIRE(generic != nullptr);
  CHECK(ideal_set(generic->components) ==
        std::set<std::string>{"<x1 + a1>", e.ideal({"x1^2", "x2"}).to_string()});
  const Segment* special = find_segment(c, "V(a1)");
  REQUIRE(special != nullptr);
  CHECK(intersect(special->components) == e.ideal({"x1^3", "x1*x2", "a1"}));
  CHECK(verify_sampled(c, VerifyLevel::minimal, 3, 4).passed());
}

TEST_CASE("Groebner basis of the prime with two parameters") {
  Env e = hilbert_ring();
  Ideal P = hilbert_prime(e);
  const auto& gb = P.groebner().elements;
  REQUIRE(gb.size() == 2);
  std::set<std::string> got{primitive_normalize(gb[0]).to_string(),
                            primitive_normalize(gb[1]).to_string()};
  std::set<std::string> want{primitive_normalize(e(hilbert_g1())).to_string(),
                             primitive_normalize(e(hilbert_g2())).to_string()};
  CHECK(got == want);
}

TEST_CASE("Hilbert subset of the prime with two parameters") {
  Env e = hilbert_ring();
  Cpds c = hilbert_cpds(hilbert_prime(e));
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].cell.to_string() == "Q^2");
  REQUIRE(c.segments[0].hilbert.size() == 1);
  const auto& cert = c.segments[0].hilbert[0];
  CHECK(cert.mis == std::vector<std::string>{"x3"});
  RingPtr tr = certificate_ring(e.ring, cert.t);
  Polynomial g1 = e(hilbert_g1()).map_to(tr);
  Polynomial expected = g1.substitute(*tr->index_of("x1"), Polynomial::variable(tr, 0));
  CHECK(primitive_normalize(cert.minpoly) == primitive_normalize(expected));
}

TEST_CASE("Hilbert subset of a zero-dimensional component") {
  Env e({"a"}, {"x1"});
  Cpds c = hilbert_cpds(e.ideal({"x1^2 - a"}));
  const Segment* generic = find_segment(c, "Q");
  REQUIRE(generic != nullptr);
  REQUIRE(generic->hilbert.size() == 1);
  const auto& cert = generic->hilbert[0];
  CHECK(cert.mis.empty());
  RingPtr tr = certificate_ring(e.ring, cert.t);
  CHECK(cert.minpoly == parse_polynomial(cert.t + "^2 - a", tr));
}

TEST_CASE("Hilbert subset of a positive-dimensional linear component") {
  Env e({"a1"}, {"x1", "x2"});
  Segment s;
  s.cell = ConstructibleSet::full(e.ring->parameter_ring());
  s.components = {e.ideal({"x1 + a1"})};
  auto certs = hilbert_subset(s);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].mis == std::vector<std::string>{"x2"});
  RingPtr tr = certificate_ring(e.ring, certs[0].t);
  CHECK(certs[0].minpoly == parse_polynomial(certs[0].t + " + a1", tr));
  CHECK(hilbert_membership(certs[0], point({{"a1", 3}})));
}

TEST_CASE("Hilbert CPDS of I1") {
  Env e({"a", "b"}, {"x1", "x2"});
  Cpds c = hilbert_cpds(e.ideal({"x1^2 - a", "b*x1*x2"}));
  CHECK(c.flavor == Flavor::hilbert);
  CHECK(c.segments.size() == 4);
  for (const auto& s : c.segments) CHECK(s.hilbert.size() == s.components.size());
  const Segment* generic = find_segment(c, "Q^2 \\ V(a*b)");
  REQUIRE(generic != nullptr);
  REQUIRE(generic->hilbert.size() == 1);
  const auto& cert = generic->hilbert[0];
  CHECK(cert.minpoly == parse_polynomial(cert.t + "^2 - a", certificate_ring(e.ring, cert.t)));
  CHECK(hilbert_membership(cert, point({{"a", 2}, {"b", 1}})));
  CHECK_FALSE(hilbert_membership(cert, point({{"a", 4}, {"b", 1}})));
}

TEST_CASE("Hilbert CPDS without parameters") {
  Env e({}, {"x"});
  Cpds c = hilbert_cpds(e.ideal({"x^2 - 2"}));
  REQUIRE(c.segments.size() == 1);
  REQUIRE(c.segments[0].hilbert.size() == 1);
  CHECK(hilbert_membership(c.segments[0].hilbert[0], Point{}));
}

TEST_CASE("Hilbert membership follows the reducibility locus") {
  Env e = hilbert_ring();
  Cpds c = hilbert_cpds(hilbert_prime(e));
  REQUIRE(c.segments.size() == 1);
  REQUIRE(c.segments[0].hilbert.size() == 1);
  const auto& cert = c.segments[0].hilbert[0];
  auto at = [](long a1, long a2) { return point({{"a1", a1}, {"a2", a2}}); };
  CHECK_FALSE(hilbert_membership(cert, at(1, 5)));
  CHECK_FALSE(hilbert_membership(cert, at(0, -1)));
  CHECK(hilbert_membership(cert, at(2, 3)));
  for (long a1 = -3; a1 <= 3; ++a1) {
    for (long a2 = -3; a2 <= 3; ++a2) {
      bool reducible = a1 == 1 || a2 == 0 || (a1 == 0 && a2 == -1);
      CAPTURE(a1);
      CAPTURE(a2);
      CHECK(hilbert_membership(cert, at(a1, a2)) == !reducible);
    }
  }
}

TEST_CASE("specialized decompositions of the prime with two parameters") {
  Env e = hilbert_ring();
  Ideal P = hilbert_prime(e);
  struct Case {
    long a1, a2;
    std::size_t count;
  };
  for (const auto& c : std::vector<Case>{{1, 0, 3}, {1, 2, 3}, {4, 0, 3}, {3, 0, 2},
                                         {5, 0, 2}, {0, -1, 2}, {2, 3, 1}, {-1, 1, 1}}) {
    CAPTURE(c.a1);
    CAPTURE(c.a2);
    Point alpha = point({{"a1", c.a1}, {"a2", c.a2}});
    std::vector<Polynomial> gens;
    for (const auto& g : P.generators()) gens.push_back(specialize(g, alpha));
    Ideal S(e.ring->parameter_free(), gens);
    auto pd = primary_decompose(S);
    CHECK(pd.size() == c.count);
    CHECK(recombine(pd) == S);
    for (const auto& q : pd) CHECK(q.primary == q.prime);
  }
}

TEST_CASE("segment verification at single points") {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Cpds c = feasible_cpds(I);
  const Segment* generic = find_segment(c, "Q^2 \\ V(a*b)");
  REQUIRE(generic != nullptr);

  auto at11 = verify_segment(I, *generic, point({{"a", 1}, {"b", 1}}), VerifyLevel::primary);
  bool pd2_ok = false, primary_ok = true;
  for (const auto& check : at11.checks) {
    if (check.name == "pd2") pd2_ok = check.passed;
    if (check.name.rfind("primary", 0) == 0 && !check.passed) primary_ok = false;
  }
  CHECK(pd2_ok);
  CHECK_FALSE(primary_ok);
  CHECK_FALSE(at11.passed());

  auto at21 = verify_segment(I, *generic, point({{"a", 2}, {"b", 1}}), VerifyLevel::primary);
  CHECK(at21.passed());

  Env f({"a1"}, {"x1", "x2"});
  Ideal I2 = f.ideal({"(x1 + a1)*x1^2", "(x1 + a1)*x2"});
  Cpds c2 = minimal_feasible_cpds(I2);
  const Segment* open = find_segment(c2, "Q \\ V(a1)");
  REQUIRE(open != nullptr);
  CHECK_THROWS_AS(verify_segment(I2, *open, point({{"a1", 0}}), VerifyLevel::minimal),
                  PreconditionError);
}

TEST_CASE("irreducible certificates imply primary specializations") {
  Env e = hilbert_ring();
  Ideal P = hilbert_prime(e);
  Cpds c = hilbert_cpds(P);
  REQUIRE(c.segments.size() == 1);
  const Segment& s = c.segments[0];
  for (long a1 = -2; a1 <= 2; ++a1) {
    for (long a2 = -2; a2 <= 2; ++a2) {
      Point alpha = point({{"a1", a1}, {"a2", a2}});
      bool all = true;
      for (const auto& cert : s.hilbert) all = all && hilbert_membership(cert, alpha);
      if (!all) continue;
      CAPTURE(to_string(alpha));
      CHECK(verify_segment(P, s, alpha, VerifyLevel::primary).passed());
    }
  }
}
