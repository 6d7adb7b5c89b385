#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpdskit/parallel.hpp"
#include "cpdskit/polynomial.hpp"

namespace cpdskit {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
  kExitInternal = 4,
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",     "cgs",  "primdec",
                                              "radical", "cpds", "cpds-min",
                                              "hilbert", "verify", "sample"};
  return names;
}

struct CommandRequest {
  std::string command;
  std::string problem_text;
  std::string cpds_text;  // document for verify and sample; empty to compute one
  bool json = false;
  std::string ideal;      // empty: first ideal of the file
  std::string order;      // empty: order of the file
  std::optional<unsigned> height;
  std::optional<unsigned> max_kronecker;
  std::optional<std::uint64_t> seed;
  std::string point;      // "a=2,b=1"
  std::string level = "pd2";
  std::optional<std::size_t> segment;
  std::size_t points = 4;  // per segment, for sampled verification and sample
  Execution execution = Execution::parallel;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Runs one command; every failure is reported through the exit code and err.
CommandResult run_command(const CommandRequest& request);

// "a=2,b=1/3" with every parameter of ring assigned exactly once.
Point parse_point(std::string_view text, const RingPtr& ring);

}  // namespace cpdskit
