#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpdskit/ideal.hpp"
#include "cpdskit/polynomial.hpp"

namespace cpdskit {

// V(zero) \ V(nonzero) in the parameter space. The nonzero ideal is stored
// with the zero ideal added, so zero is always contained in nonzero.
class LocallyClosedSet {
 public:
  LocallyClosedSet() = default;
  // Ideals are mapped into the parameter ring of whichever ring they live in.
  LocallyClosedSet(const Ideal& zero, const Ideal& nonzero);
  // K^m for the given parameter ring.
  static LocallyClosedSet full(const RingPtr& params);
  // V(zero), a closed set.
  static LocallyClosedSet closed(const Ideal& zero);

  const RingPtr& ring() const { return zero_.ring(); }
  const Ideal& zero() const { return zero_; }
  const Ideal& nonzero() const { return nonzero_; }

  // Every generator of nonzero lies in the radical of zero.
  bool is_empty_over_C() const;
  bool contains(const Point& alpha) const;
  // Replaces zero by the radical of zero : nonzero^infinity, which describes
  // the same set with a tighter closed part.
  LocallyClosedSet simplified() const;
  // "Q^2 \ V(a*b)", "V(a) \ V(a, b)", "V(a)".
  std::string to_string() const;

 private:
  Ideal zero_;
  Ideal nonzero_;
};

// Finite union of locally closed sets; no cells means the empty set.
class ConstructibleSet {
 public:
  ConstructibleSet() = default;
  explicit ConstructibleSet(RingPtr params) : ring_(std::move(params)) {}
  ConstructibleSet(RingPtr params, std::vector<LocallyClosedSet> cells);
  static ConstructibleSet full(const RingPtr& params);
  static ConstructibleSet single(const LocallyClosedSet& cell);

  const RingPtr& ring() const { return ring_; }
  const std::vector<LocallyClosedSet>& cells() const { return cells_; }
  void add(const LocallyClosedSet& cell);

  bool empty_list() const { return cells_.empty(); }
  bool is_empty_over_C() const;
  bool contains(const Point& alpha) const;
  // Drops cells that are empty over C.
  ConstructibleSet pruned() const;
  // "{}" when there are no cells, otherwise cells joined by " u ".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<LocallyClosedSet> cells_;
};

LocallyClosedSet intersect(const LocallyClosedSet& a, const LocallyClosedSet& b);
// At most two cells.
ConstructibleSet difference(const LocallyClosedSet& a, const LocallyClosedSet& b);

ConstructibleSet set_union(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet set_intersection(const ConstructibleSet& a,
                                  const ConstructibleSet& b);
ConstructibleSet set_difference(const ConstructibleSet& a,
                                const ConstructibleSet& b);
// K^m minus a.
ConstructibleSet complement(const ConstructibleSet& a);

// Rationals of height at most bound (max of |numerator|, denominator),
// ordered by height: 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
std::vector<Rational> rationals_up_to_height(unsigned bound);
unsigned height(const Rational& q);

// A rational point of the cell whose coordinates have height at most bound.
// Equations of the closed part are solved triangularly through a lex basis;
// free coordinates range over the height grid.
std::optional<Point> sample_rational_point(const LocallyClosedSet& cell,
                                           unsigned height_bound);
std::optional<Point> sample_rational_point(const ConstructibleSet& set,
                                           unsigned height_bound);
// All rational points of the cell within the bound, at most limit of them.
std::vector<Point> rational_points(const LocallyClosedSet& cell,
                                   unsigned height_bound, std::size_t limit);

struct CgsSegment {
  LocallyClosedSet cell;
  std::vector<Polynomial> basis;  // descending by leading monomial
};

// Comprehensive Groebner system: for every alpha of a cell, the specialized
// basis is a Groebner basis of the specialized ideal. The ring of F must
// carry a block order with the parameters last.
std::vector<CgsSegment> suzuki_sato_cgs(const std::vector<Polynomial>& F);

}  // namespace cpdskit
