#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cpdskit/groebner.hpp"

namespace cpdskit {

// Finitely generated ideal with a lazily computed reduced Groebner basis in
// the ring's own order. Copies share the cache, which is thread safe.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, const std::vector<Polynomial>& gens);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  // Ideal whose generators are already a reduced basis in ring's order.
  static Ideal from_basis(GroebnerBasis gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& groebner() const;
  // Reduced basis in another order over the same names.
  GroebnerBasis groebner_in(const RingPtr& other) const;

  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Polynomial& f) const;
  // other is a subset of this.
  bool contains(const Ideal& other) const;

  Ideal map_to(const RingPtr& target) const;

  // Reduced basis as generators; canonical per ring.
  Ideal canonical() const { return from_basis(groebner()); }

  // "<g1, g2>" from the reduced basis.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace cpdskit
