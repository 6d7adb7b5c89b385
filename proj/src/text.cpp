#include "cpdskit/text.hpp"

#include <cctype>

#include "cpdskit/errors.hpp"

namespace cpdskit {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

Lexer::Lexer(std::string_view text) {
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok{TokenKind::symbol, "", line, col};
    std::size_t start = i;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tok.kind = TokenKind::identifier;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '/' && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      tok.kind = TokenKind::number;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else {
      static const std::string_view symbols = "+-*^()[],;=";
      if (symbols.find(c) == std::string_view::npos) {
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      tok.text = std::string(1, c);
      advance(1);
    }
    tokens_.push_back(std::move(tok));
  }
  tokens_.push_back({TokenKind::end, "", line, col});
}

const Token& Lexer::peek_ahead(std::size_t k) const {
  return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
}

Token Lexer::next() {
  Token t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool Lexer::accept_symbol(char c) {
  const auto& t = peek();
  if (t.kind == TokenKind::symbol && t.text[0] == c) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect_symbol(char c) {
  if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
}

bool Lexer::accept_keyword(std::string_view word) {
  const auto& t = peek();
  if (t.kind == TokenKind::identifier && t.text == word) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect_keyword(std::string_view word) {
  if (!accept_keyword(word)) fail("expected '" + std::string(word) + "'");
}

std::string Lexer::expect_identifier() {
  if (peek().kind != TokenKind::identifier) fail("expected an identifier");
  return next().text;
}

void Lexer::fail(const std::string& message) const { fail_at(peek(), message); }

void Lexer::fail_at(const Token& token, const std::string& message) {
  std::string found = token.kind == TokenKind::end ? "end of input"
                                                   : "'" + token.text + "'";
  throw ParseError(message + ", found " + found, token.line, token.column);
}

namespace {

class PolyParser {
 public:
  PolyParser(Lexer& lex, const RingPtr& ring, bool syntax_only = false)
      : lex_(lex), ring_(ring), syntax_only_(syntax_only) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (lex_.accept_symbol('+')) {
        acc += term();
      } else if (lex_.accept_symbol('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (lex_.accept_symbol('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (lex_.accept_symbol('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.accept_symbol('^')) {
      const Token& t = lex_.peek();
      if (t.kind != TokenKind::number || t.text.find('/') != std::string::npos) {
        lex_.fail("expected a nonnegative integer exponent");
      }
      Integer e(t.text);
      if (e > 4096) lex_.fail("exponent too large");
      lex_.next();
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case TokenKind::number: {
        Rational q = parse_rational(t.text);
        lex_.next();
        return Polynomial::constant(ring_, q);
      }
      case TokenKind::identifier: {
        auto idx = ring_->index_of(t.text);
        if (!idx && syntax_only_) {
          lex_.next();
          return Polynomial::constant(ring_, 1);
        }
        if (!idx) Lexer::fail_at(t, "unknown identifier '" + t.text + "'");
        lex_.next();
        return Polynomial::variable(ring_, *idx);
      }
      case TokenKind::symbol:
        if (t.text == "(") {
          lex_.next();
          Polynomial inner = expr();
          lex_.expect_symbol(')');
          return inner;
        }
        break;
      case TokenKind::end:
        break;
    }
    lex_.fail("expected a number, identifier or '('");
  }

  Lexer& lex_;
  const RingPtr& ring_;
  bool syntax_only_;
};

}  // namespace

Polynomial parse_polynomial(Lexer& lexer, const RingPtr& ring) {
  return PolyParser(lexer, ring).expr();
}

void skip_polynomial(Lexer& lexer) {
  static const RingPtr empty = Ring::make({}, {});
  PolyParser(lexer, empty, true).expr();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Lexer lexer(text);
  Polynomial p = parse_polynomial(lexer, ring);
  if (!lexer.at_end()) lexer.fail("unexpected trailing input");
  return p;
}

std::string format_ideal(const std::vector<Polynomial>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  if (gens.empty()) out += "0";
  return out + ">";
}

}  // namespace cpdskit
