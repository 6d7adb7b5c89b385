#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpdskit/commands.hpp"
#include "cpdskit/document.hpp"
#include "cpdskit/errors.hpp"
#include "cpdskit/problem.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kI1 =
    "ring params [a, b] vars [x1, x2] order lex;\n"
    "ideal I1 = [x1^2 - a, b*x1*x2];\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run(const std::string& command, const std::string& problem,
                  std::initializer_list<std::pair<const char*, std::string>> flags = {}) {
  CommandRequest req;
  req.command = command;
  req.problem_text = problem;
  for (const auto& [k, v] : flags) {
    std::string key = k;
    if (key == "json") req.json = true;
    else if (key == "cpds") req.cpds_text = v;
    else if (key == "point") req.point = v;
    else if (key == "level") req.level = v;
    else if (key == "ideal") req.ideal = v;
    else if (key == "order") req.order = v;
    else if (key == "segment") req.segment = std::stoul(v);
    else if (key == "max-kronecker") req.max_kronecker = static_cast<unsigned>(std::stoul(v));
    else FAIL("unknown flag in test: " << key);
  }
  return run_command(req);
}

}  // namespace

TEST_CASE("problem file with two generators") {
  ProblemFile p = parse_problem("ring params [a,b] vars [x,y] order lex; ideal I = [x^2 - a, b*x*y];");
  CHECK(p.params == std::vector<std::string>{"a", "b"});
  CHECK(p.vars == std::vector<std::string>{"x", "y"});
  CHECK(p.order == BlockKind::lex);
  REQUIRE(p.ideals.size() == 1);
  CHECK(p.ideals[0].name == "I");
  CHECK(p.ideals[0].generators.size() == 2);
  CHECK(p.ideal().to_string() == "<x^2 - a, x*y*b, y*a*b>");
}

TEST_CASE("syntax error at the second caret") {
  try {
    parse_problem("ideal I = [x^^2];");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("parameter-free problem file") {
  ProblemFile p = parse_problem("ring params [] vars [x] order lex; ideal I = [x];");
  CHECK(p.params.empty());
  CHECK(p.ring->parameter_indices().empty());
  CHECK(p.ideal().to_string() == "<x>");
}

TEST_CASE("rejected problem files") {
  auto column_of = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(column_of("ring params [a] vars [] order lex; ideal I = [a];") ==
        std::pair<std::size_t, std::size_t>{1, 22});
  CHECK(column_of("ring params [a] vars [x] order lex;\nideal I = [x];\nideal I = [x];") ==
        std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(column_of("ring params [a] vars [x] order lex;\nideal I = [x - z];") ==
        std::pair<std::size_t, std::size_t>{2, 16});
  CHECK(column_of("ring params [a] vars [a] order lex; ideal I = [a];").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex;").first != 0);
  CHECK(column_of("ring params [a] vars [x] order elim; ideal I = [x];").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex; ideal I = [];").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex; ideal I = [x] ").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex; ideal I = [x]; option colour = 3;").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex; ideal I = [x]; option height = 0;").first != 0);
  CHECK(column_of("ring params [a] vars [x] order lex; ideal I = [x];"
                  " option height = 3; option height = 4;").first != 0);
}

TEST_CASE("problem files round-trip through their canonical text") {
  for (const char* text :
       {kI1,
        "ring params [] vars [x, y] order grevlex; ideal I = [x^2*y - y, x*y^2 - x];"
        " ideal J = [3/4*x - 1]; option seed = 7; option height = 3;",
        "ring params [a2, a1] vars [x2, x1, x3] order lex;"
        " ideal P = [-x1 + x2 - a1*x3^2 + a2*x3]; option max_kronecker = 200;"}) {
    CAPTURE(text);
    ProblemFile p = parse_problem(text);
    ProblemFile q = parse_problem(p.to_string());
    CHECK(p == q);
    CHECK(q.to_string() == p.to_string());
  }
  ProblemFile p = parse_problem(kI1);
  CHECK(p.with_order(BlockKind::grevlex).order == BlockKind::grevlex);
  CHECK_FALSE(p == p.with_order(BlockKind::grevlex));
}

TEST_CASE("options reach the request defaults") {
  ProblemFile p = parse_problem(
      "ring params [] vars [x] order lex; ideal I = [x]; option height = 3; option seed = 11;");
  CHECK(p.options.height == 3);
  CHECK(p.options.seed == 11);
  CHECK(p.options.max_kronecker == 64);
}

TEST_CASE("points parse against the parameter list") {
  RingPtr r = parse_problem(kI1).ring;
  Point p = parse_point("a=2,b=-1/3", r);
  CHECK(p.at("a") == Rational(2));
  CHECK(p.at("b") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_point("a=1", r), PreconditionError);
  CHECK_THROWS_AS(parse_point("a=1,b=2,a=3", r), PreconditionError);
  CHECK_THROWS_AS(parse_point("a=1,c=2", r), PreconditionError);
  CHECK_THROWS(parse_point("a=,b=2", r));
}

TEST_CASE("empty CPDS document") {
  Env e({"a"}, {"x"});
  Cpds c = feasible_cpds(e.ideal({"1"}));
  std::string doc = emit_document(c);
  auto j = nlohmann::json::parse(doc);
  CHECK(j["schema_version"] == kDocumentSchemaVersion);
  CHECK(j["segments"].is_array());
  CHECK(j["segments"].empty());
  Cpds back = parse_document(doc, e.ring);
  CHECK(back.segments.empty());
  CHECK(back.flavor == c.flavor);
}

TEST_CASE("CPDS documents round-trip") {
  Env e({"a", "b"}, {"x1", "x2"});
  Ideal I = e.ideal({"x1^2 - a", "b*x1*x2"});
  for (const Cpds& c : {feasible_cpds(I), minimal_feasible_cpds(I), hilbert_cpds(I)}) {
    std::string doc = emit_document(c);
    Cpds back = parse_document(doc, e.ring);
    CHECK(emit_document(back) == doc);
    CHECK(back.to_string() == canonical_order(c).to_string());
    CHECK(back.source == I);
    REQUIRE(back.segments.size() == c.segments.size());
    for (std::size_t i = 0; i < back.segments.size(); ++i) {
      CHECK(back.segments[i].hilbert.size() == canonical_order(c).segments[i].hilbert.size());
    }
  }
}

TEST_CASE("document polynomials are canonical strings") {
  Env e({"a", "b"}, {"x1", "x2"});
  auto j = nlohmann::json::parse(emit_document(minimal_feasible_cpds(e.ideal({"x1^2 - a", "b*x1*x2"}))));
  CHECK(j["segments"].size() == 4);
  for (const auto& seg : j["segments"]) {
    for (const auto& comp : seg["components"]) {
      for (const auto& g : comp) {
        std::string s = g.get<std::string>();
        CHECK(parse_polynomial(s, e.ring).to_string() == s);
      }
    }
  }
}

TEST_CASE("malformed documents") {
  Env e({"a", "b"}, {"x1", "x2"});
  CHECK_THROWS_AS(parse_document("{", e.ring), ParseError);
  CHECK_THROWS_AS(parse_document("[]", e.ring), PreconditionError);
  CHECK_THROWS_AS(parse_document(R"({"schema_version": 2})", e.ring), PreconditionError);
  std::string doc = emit_document(feasible_cpds(e.ideal({"x1^2 - a"})));
  Env other({"a"}, {"x1", "x2"});
  CHECK_THROWS_AS(parse_document(doc, other.ring), PreconditionError);
  auto j = nlohmann::json::parse(doc);
  j["segments"][0]["components"][0][0] = "x1^^2";
  CHECK_THROWS_AS(parse_document(j.dump(), e.ring), ParseError);
}

TEST_CASE("exit codes of in-process commands") {
  CHECK(run("gb", kI1).exit_code == kExitOk);
  CHECK(run("gb", "ideal I = [x^^2];").exit_code == kExitUsage);
  CHECK(run("frobnicate", kI1).exit_code == kExitUsage);
  CHECK(run("gb", kI1, {{"ideal", "J"}}).exit_code == kExitUsage);
  CHECK(run("gb", kI1, {{"order", "elim"}}).exit_code == kExitUsage);
  CHECK(run("primdec", "ring params [] vars [x, u, v] order lex; ideal I = [x^2 - u^4*v^4];",
            {{"max-kronecker", "2"}})
            .exit_code == kExitResourceLimit);

  auto doc = run("cpds-min", kI1, {{"json", ""}});
  REQUIRE(doc.exit_code == kExitOk);
  CHECK(nlohmann::json::parse(doc.out)["segments"].size() == 4);

  auto good = run("verify", kI1, {{"cpds", doc.out}, {"point", "a=2,b=1"}, {"level", "primary"}});
  CHECK(good.exit_code == kExitOk);
  auto bad = run("verify", kI1, {{"cpds", doc.out}, {"point", "a=1,b=1"}, {"level", "primary"}});
  CHECK(bad.exit_code == kExitVerificationFailed);
  CHECK(bad.out.find("<x1^2 - 1, x2>") != std::string::npos);
  CHECK(run("verify", kI1, {{"cpds", doc.out}, {"level", "sideways"}}).exit_code == kExitUsage);
  CHECK(run("sample", kI1, {{"cpds", doc.out}, {"segment", "7"}}).exit_code == kExitUsage);
}

TEST_CASE("text and JSON output agree") {
  auto text = run("primdec", kI1);
  auto json = run("primdec", kI1, {{"json", ""}});
  REQUIRE(text.exit_code == kExitOk);
  REQUIRE(json.exit_code == kExitOk);
  auto j = nlohmann::json::parse(json.out);
  REQUIRE(j.is_object());
  CHECK(text.out.find("<x1^2 - a, x2>") != std::string::npos);
  CHECK(json.out.find("x1^2 - a") != std::string::npos);
}

TEST_CASE("golden corpus through the command-line binary") {
  const std::string dir = CPDSKIT_GOLDEN_DIR;
  std::ifstream cases(dir + "/cases.txt");
  REQUIRE(cases.good());
  std::string line;
  std::size_t count = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::array<std::string, 3> cols;
    std::stringstream ss(line);
    for (auto& c : cols) {
      std::getline(ss, c, '|');
      c.erase(0, c.find_first_not_of(' '));
      c.erase(c.find_last_not_of(' ') + 1);
    }
    CAPTURE(line);
    std::string cmd = "cd '" + dir + "' && CPDSKIT_THREADS=2 '" CPDSKIT_CLI "' " + cols[1] + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == std::stoi(cols[0]));
    CHECK(out == read_file(dir + "/" + cols[2]));
    ++count;
  }
  CHECK(count > 30);
}
