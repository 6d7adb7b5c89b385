#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cpdskit {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Parses "p" or "p/q" with optional leading '-'. Throws PreconditionError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cpdskit
