#include "cpdskit/ideal.hpp"

#include "cpdskit/errors.hpp"
#include "cpdskit/text.hpp"

namespace cpdskit {

Ideal::Ideal(RingPtr ring, const std::vector<Polynomial>& gens)
    : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.ring() == ring_ ? g : g.map_to(ring_);
    gens_.push_back(std::move(m));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::from_basis(GroebnerBasis gb) {
  Ideal I(gb.ring, gb.elements);
  std::call_once(I.cache_->once, [&] { I.cache_->gb = std::move(gb); });
  return I;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
  return cache_->gb;
}

GroebnerBasis Ideal::groebner_in(const RingPtr& other) const {
  if (other == ring_) return groebner();
  return buchberger(other, gens_);
}

bool Ideal::contains(const Polynomial& f) const {
  return reduces_to_zero(f, groebner());
}

bool Ideal::contains(const Ideal& other) const {
  const auto& gb = groebner();
  if (gb.is_unit()) return true;
  for (const auto& g : other.generators()) {
    if (!reduces_to_zero(g, gb)) return false;
  }
  return true;
}

Ideal Ideal::map_to(const RingPtr& target) const {
  return Ideal(target, gens_);
}

std::string Ideal::to_string() const {
  const auto& els = groebner().elements;
  return format_ideal(std::vector<Polynomial>(els.rbegin(), els.rend()));
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.groebner() == b.map_to(a.ring()).groebner();
}

}  // namespace cpdskit
