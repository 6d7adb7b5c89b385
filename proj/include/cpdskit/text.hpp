#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpdskit/polynomial.hpp"

namespace cpdskit {

enum class TokenKind { identifier, number, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Tokenizer shared by the polynomial grammar and the problem-file grammar.
// Numbers are unsigned integers or "p/q" literals without spaces. '#' starts
// a comment running to the end of the line.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek_ahead(std::size_t k) const;
  Token next();
  bool at_end() const { return peek().kind == TokenKind::end; }

  bool accept_symbol(char c);
  void expect_symbol(char c);
  bool accept_keyword(std::string_view word);
  void expect_keyword(std::string_view word);
  std::string expect_identifier();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] static void fail_at(const Token& token, const std::string& message);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Parses one polynomial expression from the lexer in the given ring. Unknown
// identifiers are rejected.
Polynomial parse_polynomial(Lexer& lexer, const RingPtr& ring);

// Consumes one polynomial expression, checking only its syntax.
void skip_polynomial(Lexer& lexer);

// Parses a whole string as a polynomial.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical printing of a list as "<f1, f2>".
std::string format_ideal(const std::vector<Polynomial>& gens);

}  // namespace cpdskit
