#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpdskit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// A caller contract was violated (zero polynomial where nonzero required,
// missing parameter value, point outside a cell, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured bound was exceeded (Kronecker degree, saturation cap,
// recursion depth, variable capacity, candidate budget).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An invariant the algorithms guarantee did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cpdskit
