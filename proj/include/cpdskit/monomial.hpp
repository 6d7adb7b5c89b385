#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace cpdskit {

// Upper bound on the number of indeterminates in one ring, counting slack
// and temporary variables introduced by elimination.
inline constexpr std::size_t kMaxVars = 32;

// Dense exponent vector over the ring's index space.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned exponent);

  unsigned degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  // other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // True when no variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cpdskit
