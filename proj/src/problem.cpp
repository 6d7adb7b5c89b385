#include "cpdskit/problem.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "cpdskit/errors.hpp"
#include "cpdskit/text.hpp"

namespace cpdskit {

const char* to_string(BlockKind kind) {
  return kind == BlockKind::lex ? "lex" : "grevlex";
}

std::optional<BlockKind> parse_block_kind(const std::string& text) {
  if (text == "lex") return BlockKind::lex;
  if (text == "grevlex") return BlockKind::grevlex;
  return std::nullopt;
}

const NamedIdeal& ProblemFile::find(const std::string& name) const {
  if (ideals.empty()) throw PreconditionError("problem file declares no ideal");
  if (name.empty()) return ideals.front();
  for (const auto& ideal : ideals) {
    if (ideal.name == name) return ideal;
  }
  throw PreconditionError("no ideal named '" + name + "'");
}

Ideal ProblemFile::ideal(const std::string& name) const {
  return Ideal(ring, find(name).generators);
}

ProblemFile ProblemFile::with_order(BlockKind kind) const {
  ProblemFile out = *this;
  out.order = kind;
  out.ring = Ring::make(params, vars, kind);
  for (auto& ideal : out.ideals) {
    for (auto& g : ideal.generators) g = g.map_to(out.ring);
  }
  return out;
}

namespace {

void join(std::ostringstream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ", ";
    out << names[i];
  }
}

}  // namespace

std::string ProblemFile::to_string() const {
  std::ostringstream out;
  out << "ring params [";
  join(out, params);
  out << "] vars [";
  join(out, vars);
  out << "] order " << cpdskit::to_string(order) << ";\n";
  for (const auto& ideal : ideals) {
    out << "ideal " << ideal.name << " = [";
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      if (i) out << ", ";
      out << ideal.generators[i].to_string();
    }
    out << "];\n";
  }
  const ProblemOptions defaults;
  if (options.height != defaults.height) {
    out << "option height = " << options.height << ";\n";
  }
  if (options.max_kronecker != defaults.max_kronecker) {
    out << "option max_kronecker = " << options.max_kronecker << ";\n";
  }
  if (options.seed != defaults.seed) out << "option seed = " << options.seed << ";\n";
  if (options.candidate_budget != defaults.candidate_budget) {
    out << "option candidate_budget = " << options.candidate_budget << ";\n";
  }
  return out.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.params != b.params || a.vars != b.vars || a.order != b.order ||
      !(a.options == b.options) || a.ideals.size() != b.ideals.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    const auto& x = a.ideals[i];
    const auto& y = b.ideals[i];
    if (x.name != y.name || x.generators.size() != y.generators.size()) return false;
    for (std::size_t j = 0; j < x.generators.size(); ++j) {
      if (!(x.generators[j] == y.generators[j].map_to(a.ring))) return false;
    }
  }
  return true;
}

namespace {

constexpr const char* kOptionNames[] = {"height", "max_kronecker", "seed",
                                          "candidate_budget"};

class ProblemParser {
 public:
  explicit ProblemParser(std::string_view text) : lex_(text) {}

  ProblemFile parse() {
    ProblemFile file;
    if (lex_.peek().kind != TokenKind::identifier || lex_.peek().text != "ring") {
      // Report syntax errors in the rest of the file before the missing ring.
      Token first = lex_.peek();
      while (!lex_.at_end()) declaration(file, false);
      Lexer::fail_at(first, "expected 'ring' declaration");
    }
    ring_declaration(file);
    while (!lex_.at_end()) declaration(file, true);
    if (file.ideals.empty()) lex_.fail("expected at least one 'ideal' declaration");
    return file;
  }

 private:
  void ring_declaration(ProblemFile& file) {
    lex_.expect_keyword("ring");
    lex_.expect_keyword("params");
    std::set<std::string> seen;
    file.params = names(seen);
    lex_.expect_keyword("vars");
    const Token& open = lex_.peek();
    file.vars = names(seen);
    if (file.vars.empty()) Lexer::fail_at(open, "variable list is empty");
    lex_.expect_keyword("order");
    const Token& kind = lex_.peek();
    auto order = kind.kind == TokenKind::identifier ? parse_block_kind(kind.text)
                                                    : std::nullopt;
    if (!order) Lexer::fail_at(kind, "expected 'lex' or 'grevlex'");
    lex_.next();
    lex_.expect_symbol(';');
    file.order = *order;
    file.ring = Ring::make(file.params, file.vars, file.order);
  }

  std::vector<std::string> names(std::set<std::string>& seen) {
    std::vector<std::string> out;
    lex_.expect_symbol('[');
    if (lex_.accept_symbol(']')) return out;
    do {
      const Token& token = lex_.peek();
      std::string name = lex_.expect_identifier();
      if (!seen.insert(name).second) {
        Lexer::fail_at(token, "duplicate name '" + name + "'");
      }
      out.push_back(name);
    } while (lex_.accept_symbol(','));
    lex_.expect_symbol(']');
    return out;
  }

  void declaration(ProblemFile& file, bool have_ring) {
    const Token& head = lex_.peek();
    if (head.kind == TokenKind::identifier && head.text == "ideal") {
      ideal_declaration(file, have_ring);
    } else if (head.kind == TokenKind::identifier && head.text == "option") {
      option_declaration(file);
    } else if (head.kind == TokenKind::identifier && head.text == "ring") {
      Lexer::fail_at(head, "duplicate 'ring' declaration");
    } else {
      Lexer::fail_at(head, "expected 'ideal' or 'option'");
    }
  }

  void ideal_declaration(ProblemFile& file, bool have_ring) {
    lex_.expect_keyword("ideal");
    const Token& token = lex_.peek();
    std::string name = lex_.expect_identifier();
    if (!ideal_names_.insert(name).second) {
      Lexer::fail_at(token, "duplicate ideal '" + name + "'");
    }
    lex_.expect_symbol('=');
    lex_.expect_symbol('[');
    NamedIdeal ideal{name, {}};
    do {
      if (have_ring) {
        ideal.generators.push_back(parse_polynomial(lex_, file.ring));
      } else {
        skip_polynomial(lex_);
      }
    } while (lex_.accept_symbol(','));
    lex_.expect_symbol(']');
    lex_.expect_symbol(';');
    file.ideals.push_back(std::move(ideal));
  }

  void option_declaration(ProblemFile& file) {
    lex_.expect_keyword("option");
    const Token& token = lex_.peek();
    std::string name = lex_.expect_identifier();
    if (std::find(std::begin(kOptionNames), std::end(kOptionNames), name) ==
        std::end(kOptionNames)) {
      Lexer::fail_at(token, "unknown option '" + name + "'");
    }
    if (!option_names_.insert(name).second) {
      Lexer::fail_at(token, "duplicate option '" + name + "'");
    }
    lex_.expect_symbol('=');
    const Token& value = lex_.peek();
    std::uint64_t n = 0;
    bool ok = value.kind == TokenKind::number;
    if (ok) {
      const char* begin = value.text.data();
      const char* end = begin + value.text.size();
      auto res = std::from_chars(begin, end, n);
      ok = res.ec == std::errc() && res.ptr == end;
    }
    if (!ok) Lexer::fail_at(value, "expected a nonnegative integer");
    if (name != "seed" && (n == 0 || n > 1000000)) {
      Lexer::fail_at(value, "option value out of range");
    }
    lex_.next();
    lex_.expect_symbol(';');
    auto& o = file.options;
    if (name == "height") o.height = static_cast<unsigned>(n);
    if (name == "max_kronecker") o.max_kronecker = static_cast<unsigned>(n);
    if (name == "seed") o.seed = n;
    if (name == "candidate_budget") o.candidate_budget = static_cast<unsigned>(n);
  }

  Lexer lex_;
  std::set<std::string> ideal_names_;
  std::set<std::string> option_names_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  return ProblemParser(text).parse();
}

}  // namespace cpdskit
