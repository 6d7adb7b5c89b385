#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cpdskit/commands.hpp"

namespace {

const char* describe(const std::string& command) {
  static const std::map<std::string, const char*> text{
      {"gb", "reduced Groebner basis"},
      {"cgs", "comprehensive Groebner system"},
      {"primdec", "primary decomposition in Q[A, X]"},
      {"radical", "radical of the ideal"},
      {"cpds", "feasible comprehensive primary decomposition system"},
      {"cpds-min", "minimal feasible comprehensive primary decomposition system"},
      {"hilbert", "minimal feasible system with primality certificates"},
      {"verify", "check a system at one point or at sampled points"},
      {"sample", "rational sample points of the segment cells"},
  };
  auto it = text.find(command);
  return it == text.end() ? "" : it->second;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cpdskit;
  CLI::App app{"Comprehensive primary decomposition systems of parametric ideals"};
  app.require_subcommand(1);

  CommandRequest request;
  std::string problem_path;
  std::string cpds_path;
  bool serial = false;

  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("file", problem_path, "problem file")->required();
    sub->add_flag("--json", request.json, "emit JSON");
    sub->add_option("--ideal", request.ideal, "ideal name (default: first)");
    sub->add_option("--order", request.order, "variable order: lex or grevlex");
    sub->add_option("--height", request.height, "sampling height bound (default 5)");
    sub->add_option("--max-kronecker", request.max_kronecker,
                    "factorization degree bound (default 64)");
    sub->add_option("--seed", request.seed, "seed for randomized point choice");
    sub->add_flag("--serial", serial, "run every loop on the calling thread");
    if (name == "verify" || name == "sample") {
      sub->add_option("--cpds", cpds_path, "CPDS document (default: compute one)");
      sub->add_option("--segment", request.segment, "segment index in document order");
      sub->add_option("--points", request.points, "sample points per segment (default 4)");
    }
    if (name == "verify") {
      sub->add_option("--point", request.point, "parameter point, e.g. a=2,b=1");
      sub->add_option("--level", request.level, "pd2, minimal or primary (default pd2)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) request.command = sub->get_name();
  request.execution = serial ? Execution::serial : Execution::parallel;

  if (!read_file(problem_path, request.problem_text)) {
    std::cerr << "error: cannot read " << problem_path << "\n";
    return kExitUsage;
  }
  if (!cpds_path.empty() && !read_file(cpds_path, request.cpds_text)) {
    std::cerr << "error: cannot read " << cpds_path << "\n";
    return kExitUsage;
  }
  CommandResult result = run_command(request);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
