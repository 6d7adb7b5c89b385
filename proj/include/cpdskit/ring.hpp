#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cpdskit/monomial.hpp"

namespace cpdskit {

enum class BlockKind { lex, grevlex };

struct OrderBlock {
  std::vector<std::size_t> vars;  // most significant first
  BlockKind kind = BlockKind::lex;

  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

// Block monomial order. Earlier blocks dominate later ones.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<OrderBlock> blocks, std::size_t num_vars);

  // Returns >0 when a > b, <0 when a < b, 0 when equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  enum class StepKind : std::uint8_t { lex_var, block_degree, revlex_var };
  struct Step {
    StepKind kind;
    std::size_t var;    // lex_var / revlex_var
    std::size_t block;  // block_degree
  };

  std::vector<OrderBlock> blocks_;
  std::vector<Step> steps_;
  bool identity_lex_ = false;
  std::size_t num_vars_ = 0;
};

enum class VarRole : std::uint8_t { slack, variable, parameter };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Named indeterminates and a monomial order. Index layout for rings built by
// make(): slack block, then variables, then parameters, so that plain lex on
// indices is the block order T >> X >> A.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(const std::vector<std::string>& params,
                      const std::vector<std::string>& vars,
                      BlockKind var_kind = BlockKind::lex,
                      const std::vector<std::string>& slack = {});
  static RingPtr make_custom(std::vector<std::string> names,
                             std::vector<VarRole> roles, MonomialOrder order);

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_roles_and_order(std::vector<VarRole> roles,
                               MonomialOrder order) const;

  // Ring over the non-parameter indeterminates with the induced order.
  RingPtr parameter_free() const;
  // Ring over the parameters only (lex in declaration order).
  RingPtr parameter_ring() const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  VarRole role(std::size_t i) const { return roles_[i]; }
  const std::vector<VarRole>& roles() const { return roles_; }
  bool is_parameter(std::size_t i) const {
    return roles_[i] == VarRole::parameter;
  }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  std::vector<std::size_t> indices_with(VarRole role) const;
  std::vector<std::size_t> parameter_indices() const {
    return indices_with(VarRole::parameter);
  }
  // Slack and ordinary variables.
  std::vector<std::size_t> non_parameter_indices() const;
  std::size_t num_parameters() const;

  const MonomialOrder& order() const { return order_; }

  // Same names, roles and order.
  bool same_as(const Ring& other) const;

  // Splits m into its non-parameter part and its parameter part.
  std::pair<Monomial, Monomial> split(const Monomial& m) const;

  // Monomial rendered as "x^2*y".
  std::string format(const Monomial& m) const;

  // A name not yet used in this ring, derived from base.
  std::string fresh_name(const std::string& base) const;

 private:
  Ring(std::vector<std::string> names, std::vector<VarRole> roles,
       MonomialOrder order);

  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
  MonomialOrder order_;
  Monomial parameter_mask_;

  mutable std::once_flag free_once_;
  mutable RingPtr free_ring_;
  mutable std::once_flag param_once_;
  mutable RingPtr param_ring_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || a->same_as(*b);
}

}  // namespace cpdskit
