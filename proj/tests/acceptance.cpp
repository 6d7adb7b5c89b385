// Acceptance runner: one PASS/FAIL line per criterion, each with its runtime
// and time budget. Exit status 0 when criteria 1 to 9 pass; the stretch
// criterion 10 is reported but never affects the status.
#define DOCTEST_CONFIG_DISABLE
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>

#include "cpdskit/cpds.hpp"
#include "cpdskit/strata.hpp"
#include "examples.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;  // 0 means no bound
  std::function<Outcome()> run;
};

std::string join(const std::set<std::string>& items) {
  std::string out = "{";
  for (const auto& s : items) out += (out.size() > 1 ? "; " : "") + s;
  return out + "}";
}

std::set<std::string> radicals_of(const std::vector<Ideal>& ideals) {
  std::set<std::string> out;
  for (const auto& q : ideals) out.insert(radical(q).to_string());
  return out;
}

// Checks accumulate failures into a message instead of stopping early, so a
// failing criterion names every mismatch.
struct Tally {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << (notes.tellp() > 0 ? "; " : "") << what;
    }
  }
  Outcome done(const std::string& summary) const {
    return {ok, ok ? summary : notes.str()};
  }
};

const Segment* find_cell(const Cpds& c, const std::string& cell) {
  for (const auto& s : c.segments) {
    if (s.cell.to_string() == cell) return &s;
  }
  return nullptr;
}

// The cell of a segment as a set of radical-normalized cell strings.
std::string radical_cell(const Segment& s) {
  std::set<std::string> parts;
  for (const auto& cell : s.cell.cells()) {
    LocallyClosedSet r(radical(cell.zero()), radical(cell.nonzero()));
    parts.insert(r.simplified().to_string());
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " u ") + p;
  return out;
}

Outcome embedded_decomposition() {
  Env e({"a1"}, {"x1", "x2"});
  Ideal I = e.ideal({"(x1 + a1)*x1^2", "(x1 + a1)*x2"});
  auto comps = primary_decompose(I);
  Tally t;
  auto radicals = radical_set(comps);
  t.expect(radicals == std::set<std::string>{"<x1 + a1>", "<x1, x2>"},
           "radicals " + join(radicals));
  t.expect(recombine(comps) == I, "intersection differs from I");
  return t.done("radicals " + join(radicals) + ", intersection equals I");
}

Outcome cgs_example() {
  Env e({"a1"}, {"x1", "x2"});
  auto segs = suzuki_sato_cgs(e.polys({"a1*x1^2 + x2", "x2^2"}));
  Tally t;
  t.expect(segs.size() == 2, std::to_string(segs.size()) + " segments");
  std::set<std::string> got;
  for (const auto& s : segs) got.insert(s.cell.to_string() + " : " + format_ideal(s.basis));
  std::set<std::string> want{"Q \\ V(a1) : " + format_ideal(e.polys({"a1*x1^2 + x2", "x2^2"})),
                             "V(a1) : " + format_ideal(e.polys({"x2"}))};
  t.expect(got == want, "segments " + join(got));
  return t.done(join(got));
}

Outcome feasible_two_parameter() {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Cpds c = feasible_cpds(I);
  Tally t;
  std::set<std::string> cells;
  for (const auto& s : c.segments) cells.insert(radical_cell(s));
  t.expect(c.segments.size() == 3, std::to_string(c.segments.size()) + " segments with cells " +
                                       join(cells) + " (expected 3)");
  struct Expected {
    const char* cell;
    std::set<std::string> radicals;
  };
  for (const auto& ex : std::vector<Expected>{
           {"Q^2 \\ V(a*b)", {"<x1^2 - a, x2>"}},
           {"V(a)", {"<x1, a>", "<x1, a, b>", "<x1, x2, a>"}},
           {"V(b)", {"<x1^2 - a, b>"}}}) {
    const Segment* s = nullptr;
    for (const auto& seg : c.segments) {
      if (radical_cell(seg) == ex.cell) s = &seg;
    }
    if (s == nullptr) {
      t.expect(false, std::string("no segment with cell ") + ex.cell);
      continue;
    }
    auto got = radicals_of(s->components);
    t.expect(got == ex.radicals,
             std::string("cell ") + ex.cell + " has radicals " + join(got));
  }
  auto v = verify_sampled(c, VerifyLevel::pd2, 3, 4);
  t.expect(v.points_checked > 0 && v.passed(),
           "pd2 verification: " + std::to_string(v.failures.size()) + " failures");
  return t.done("3 segments " + join(cells) + ", pd2 passes at " +
                std::to_string(v.points_checked) + " points");
}

Outcome minimal_i1() {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  Cpds c = minimal_feasible_cpds(I);
  Tally t;
  t.expect(c.segments.size() == 4, std::to_string(c.segments.size()) + " segments");
  struct Expected {
    const char* cell;
    std::set<std::string> radicals;
    std::initializer_list<const char*> intersection;
  };
  for (const auto& ex : std::vector<Expected>{
           {"Q^2 \\ V(a*b)", {"<x1^2 - a, x2>"}, {"x1^2 - a", "x2"}},
           {"V(a) \\ V(a, b)", {"<x1, a>", "<x1, x2, a>"}, {"x1^2", "x1*x2", "a"}},
           {"V(a, b)", {"<x1, a, b>"}, {"x1^2", "a", "b"}},
           {"V(b)", {"<x1^2 - a, b>"}, {"x1^2 - a", "b"}}}) {
    const Segment* s = find_cell(c, ex.cell);
    if (s == nullptr) {
      t.expect(false, std::string("no segment with cell ") + ex.cell);
      continue;
    }
    auto got = radicals_of(s->components);
    t.expect(got == ex.radicals, std::string("cell ") + ex.cell + " has radicals " + join(got));
    t.expect(intersect(s->components) == e.ideal(ex.intersection),
             std::string("cell ") + ex.cell + " intersection differs");
  }
  auto v = verify_sampled(c, VerifyLevel::minimal, 3, 4);
  t.expect(v.points_checked > 0 && v.passed(),
           "minimal verification: " + std::to_string(v.failures.size()) + " failures");
  return t.done("4 segments match, minimal verification passes at " +
                std::to_string(v.points_checked) + " points");
}

Outcome cyclic4_feasible() {
  Env e = cyclic_ring();
  Ideal I = cyclic4(e);
  Cpds c = feasible_cpds(I);
  Tally t;
  std::set<std::string> cells;
  for (const auto& s : c.segments) cells.insert(s.cell.to_string());
  std::set<std::string> want{"Q \\ V(c0^5 - c0)", "V(c0^2 + 1)", "V(c0 + 1)", "V(c0 - 1)",
                             "V(c0)"};
  t.expect(cells == want, "cells " + join(cells));
  const Segment* generic = find_cell(c, "Q \\ V(c0^5 - c0)");
  if (generic != nullptr) {
    t.expect(generic->components.size() == 2,
             std::to_string(generic->components.size()) + " generic components");
    auto report = verify_segment(I, *generic, point({{"c0", 2}}), VerifyLevel::pd2);
    t.expect(report.passed(), "verification at c0 = 2: " + report.to_string());
  }
  return t.done("cells " + join(cells) + ", generic intersection verified at c0 = 2");
}

Outcome hilbert_prime_basis() {
  Env e = hilbert_ring();
  Ideal P = hilbert_prime(e);
  Tally t;
  std::set<std::string> got;
  for (const auto& g : P.groebner().elements) got.insert(primitive_normalize(g).to_string());
  std::set<std::string> want{primitive_normalize(e(hilbert_g1())).to_string(),
                             primitive_normalize(e(hilbert_g2())).to_string()};
  t.expect(got == want, "basis " + join(got));
  Cpds c = hilbert_cpds(P);
  if (c.segments.size() != 1 || c.segments[0].hilbert.size() != 1) {
    t.expect(false, "expected one segment with one certificate");
    return t.done("");
  }
  const auto& cert = c.segments[0].hilbert[0];
  t.expect(cert.mis == std::vector<std::string>{"x3"}, "U differs from {x3}");
  RingPtr tr = certificate_ring(e.ring, cert.t);
  Polynomial g1 = e(hilbert_g1()).map_to(tr);
  Polynomial expected = g1.substitute(*tr->index_of("x1"), Polynomial::variable(tr, 0));
  t.expect(primitive_normalize(cert.minpoly) == primitive_normalize(expected),
           "minimal polynomial " + cert.minpoly.to_string());
  return t.done("basis {g1, g2}, U = {x3}, minimal polynomial g1");
}

Outcome specialization_table() {
  Env e = hilbert_ring();
  Ideal P = hilbert_prime(e);
  struct Case {
    long a1, a2;
    std::size_t count;
  };
  Tally t;
  for (const auto& c : std::vector<Case>{{1, 0, 3}, {1, 2, 3}, {4, 0, 3}, {3, 0, 2},
                                         {5, 0, 2}, {0, -1, 2}, {2, 3, 1}, {-1, 1, 1}}) {
    Point alpha = point({{"a1", c.a1}, {"a2", c.a2}});
    std::vector<Polynomial> gens;
    for (const auto& g : P.generators()) gens.push_back(specialize(g, alpha));
    Ideal S(e.ring->parameter_free(), gens);
    auto pd = primary_decompose(S);
    std::string at = "(" + std::to_string(c.a1) + ", " + std::to_string(c.a2) + ")";
    t.expect(pd.size() == c.count, at + " gives " + std::to_string(pd.size()) + " components");
    t.expect(recombine(pd) == S, at + " recombination differs");
    for (const auto& q : pd) t.expect(q.primary == q.prime, at + " component is not prime");
  }
  return t.done("component counts 3,3,3,2,2,2,1,1 with prime components");
}

Outcome membership_grid() {
  Env e = hilbert_ring();
  Cpds c = hilbert_cpds(hilbert_prime(e));
  Tally t;
  if (c.segments.size() != 1 || c.segments[0].hilbert.size() != 1) {
    t.expect(false, "expected one segment with one certificate");
    return t.done("");
  }
  const auto& cert = c.segments[0].hilbert[0];
  int points = 0;
  for (long a1 = -3; a1 <= 3; ++a1) {
    for (long a2 = -3; a2 <= 3; ++a2) {
      bool reducible = a1 == 1 || a2 == 0 || (a1 == 0 && a2 == -1);
      bool member = hilbert_membership(cert, point({{"a1", a1}, {"a2", a2}}));
      t.expect(member == !reducible, "disagreement at (" + std::to_string(a1) + ", " +
                                         std::to_string(a2) + ")");
      ++points;
    }
  }
  return t.done("agrees with the reducibility locus at " + std::to_string(points) + " points");
}

Outcome property_suites() {
  std::string command = std::string("\"") + CPDSKIT_PROPERTIES + "\" > /dev/null 2>&1";
  int status = std::system(command.c_str());
  Tally t;
  t.expect(status == 0, "property suite exited with status " + std::to_string(status));
  return t.done("all five randomized suites pass");
}

Outcome adjacent_minors() {
  std::vector<std::string> vars;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != 1 || j != 1) vars.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  }
  Env e({"x11"}, vars, BlockKind::grevlex);
  std::vector<Polynomial> gens;
  auto x = [](int i, int j) { return "x" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 3; ++j) {
      gens.push_back(e(x(i, j) + "*" + x(i + 1, j + 1) + " - " + x(i, j + 1) + "*" +
                       x(i + 1, j)));
    }
  }
  Cpds c = feasible_cpds(Ideal(e.ring, gens));
  Tally t;
  t.expect(complement(c.covered()).is_empty_over_C(), "segments do not cover the line");
  return t.done("completed with " + std::to_string(c.segments.size()) + " segments");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool skip_stretch = false;
  std::vector<int> only;
  app.add_flag("--skip-stretch", skip_stretch, "Skip criterion 10");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "embedded example decomposition", 5, embedded_decomposition},
      {2, "CGS example", 1, cgs_example},
      {3, "feasible CPDS of x1^2 - a, b*x1*x2", 30, feasible_two_parameter},
      {4, "minimal feasible CPDS of I1", 60, minimal_i1},
      {5, "feasible CPDS of cyclic(4)", 600, cyclic4_feasible},
      {6, "basis and certificate of the two-parameter prime", 60, hilbert_prime_basis},
      {7, "specialization table", 120, specialization_table},
      {8, "Hilbert membership grid", 120, membership_grid},
      {9, "property suites", 900, property_suites},
      {10, "stretch: adjacent minors A(2,3,4) over x11", 0, adjacent_minors},
  };

  bool all_required = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    if (c.number == 10 && skip_stretch) {
      std::printf("criterion 10: SKIP %s\n", c.title);
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.budget_seconds == 0 || seconds <= c.budget_seconds;
    bool passed = outcome.passed && in_time;
    std::string budget = c.budget_seconds == 0
                             ? "no bound"
                             : "budget " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    std::printf("criterion %d: %s %s (%.2f s, %s) %s%s\n", c.number, passed ? "PASS" : "FAIL",
                c.title, seconds, budget.c_str(), outcome.detail.c_str(),
                in_time ? "" : " [over time budget]");
    std::fflush(stdout);
    if (c.number != 10 && !passed) all_required = false;
  }
  return all_required ? 0 : 1;
}
