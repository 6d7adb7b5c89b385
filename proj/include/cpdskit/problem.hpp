#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpdskit/ideal.hpp"

namespace cpdskit {

// Settings a problem file can carry with "option NAME = VALUE;".
struct ProblemOptions {
  unsigned height = 5;          // sampling height bound
  unsigned max_kronecker = 64;  // factorization degree bound
  std::uint64_t seed = 0;
  unsigned candidate_budget = 64;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
};

// One ring declaration, one or more named ideals, options.
struct ProblemFile {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  BlockKind order = BlockKind::lex;
  RingPtr ring;
  std::vector<NamedIdeal> ideals;
  ProblemOptions options;

  // The named ideal, or the first one when name is empty. Throws
  // PreconditionError for an unknown name.
  const NamedIdeal& find(const std::string& name) const;
  // The named ideal in the file's ring.
  Ideal ideal(const std::string& name = {}) const;
  // Same file with the variable block under another order.
  ProblemFile with_order(BlockKind kind) const;

  // Canonical file text; parse_problem(to_string()) reproduces the file.
  std::string to_string() const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

// Throws ParseError with the position of the offending token.
ProblemFile parse_problem(std::string_view text);

const char* to_string(BlockKind kind);
std::optional<BlockKind> parse_block_kind(const std::string& text);

}  // namespace cpdskit
