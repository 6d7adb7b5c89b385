#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "cpdskit/ideal.hpp"
#include "cpdskit/ideal_ops.hpp"
#include "cpdskit/primdec.hpp"
#include "cpdskit/text.hpp"

namespace testing {

using namespace cpdskit;

// A ring with parsing shortcuts.
struct Env {
  RingPtr ring;

  Env(const std::vector<std::string>& params, const std::vector<std::string>& vars,
      BlockKind kind = BlockKind::lex)
      : ring(Ring::make(params, vars, kind)) {}
  explicit Env(RingPtr r) : ring(std::move(r)) {}

  Polynomial operator()(const std::string& text) const {
    return parse_polynomial(text, ring);
  }
  std::vector<Polynomial> polys(std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> out;
    for (const char* g : gens) out.push_back((*this)(g));
    return out;
  }
  Ideal ideal(std::initializer_list<const char*> gens) const {
    return Ideal(ring, polys(gens));
  }
};

inline std::set<std::string> radical_set(const std::vector<PrimaryComponent>& comps) {
  std::set<std::string> out;
  for (const auto& c : comps) out.insert(c.prime.to_string());
  return out;
}

inline std::set<std::string> ideal_set(const std::vector<Ideal>& ideals) {
  std::set<std::string> out;
  for (const auto& i : ideals) out.insert(i.to_string());
  return out;
}

inline Ideal recombine(const std::vector<PrimaryComponent>& comps) {
  std::vector<Ideal> qs;
  for (const auto& c : comps) qs.push_back(c.primary);
  return intersect(qs);
}

inline Point point(std::initializer_list<std::pair<const char*, long>> values) {
  Point p;
  for (const auto& [name, v] : values) p[name] = Rational(v);
  return p;
}

}  // namespace testing

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<std::set<std::string>> {
  static String convert(const std::set<std::string>& values) {
    std::string out = "{";
    for (const auto& v : values) out += (out.size() > 1 ? " | " : "") + v;
    return (out + "}").c_str();
  }
};
}  // namespace doctest
