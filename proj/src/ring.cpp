#include "cpdskit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cpdskit/errors.hpp"

namespace cpdskit {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= kMaxVars) throw ResourceLimit("variable index beyond capacity");
  if (exponent > 0xffffu) throw ResourceLimit("exponent overflow");
  e_[i] = static_cast<Exponent>(exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : e_) {
    if (e) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    q.e_[i] = static_cast<Exponent>(other.e_[i] - e_[i]);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    q.e_[i] = std::max(e_[i], other.e_[i]);
  }
  return q;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    q.e_[i] = std::min(e_[i], other.e_[i]);
  }
  return q;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] && other.e_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e_[i]) + b.e_[i];
    if (s > 0xffffu) throw ResourceLimit("exponent overflow");
    m.e_[i] = static_cast<Monomial::Exponent>(s);
  }
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : e_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(std::vector<OrderBlock> blocks,
                             std::size_t num_vars)
    : blocks_(std::move(blocks)), num_vars_(num_vars) {
  std::vector<bool> seen(num_vars, false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    for (auto v : block.vars) {
      if (v >= num_vars || seen[v]) {
        throw PreconditionError("order blocks must partition the variables");
      }
      seen[v] = true;
    }
    if (block.kind == BlockKind::lex) {
      for (auto v : block.vars) steps_.push_back({StepKind::lex_var, v, b});
    } else {
      steps_.push_back({StepKind::block_degree, 0, b});
      for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it) {
        steps_.push_back({StepKind::revlex_var, *it, b});
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("order blocks must cover every variable");
  }
  identity_lex_ = true;
  std::size_t expect = 0;
  for (const auto& s : steps_) {
    if (s.kind != StepKind::lex_var || s.var != expect++) identity_lex_ = false;
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (identity_lex_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  for (const auto& s : steps_) {
    switch (s.kind) {
      case StepKind::lex_var:
        if (a[s.var] != b[s.var]) return a[s.var] > b[s.var] ? 1 : -1;
        break;
      case StepKind::revlex_var:
        if (a[s.var] != b[s.var]) return a[s.var] < b[s.var] ? 1 : -1;
        break;
      case StepKind::block_degree: {
        unsigned da = 0, db = 0;
        for (auto v : blocks_[s.block].vars) {
          da += a[v];
          db += b[v];
        }
        if (da != db) return da > db ? 1 : -1;
        break;
      }
    }
  }
  return 0;
}

Ring::Ring(std::vector<std::string> names, std::vector<VarRole> roles,
           MonomialOrder order)
    : names_(std::move(names)), roles_(std::move(roles)),
      order_(std::move(order)) {
  if (names_.size() > kMaxVars) {
    throw ResourceLimit("ring has more than " + std::to_string(kMaxVars) +
                        " indeterminates");
  }
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (uniq.size() != names_.size()) {
    throw PreconditionError("ring variable names must be pairwise distinct");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (roles_[i] == VarRole::parameter) parameter_mask_.set(i, 1);
  }
}

RingPtr Ring::make(const std::vector<std::string>& params,
                   const std::vector<std::string>& vars, BlockKind var_kind,
                   const std::vector<std::string>& slack) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  std::vector<OrderBlock> blocks;
  auto add_block = [&](const std::vector<std::string>& list, VarRole role,
                       BlockKind kind) {
    if (list.empty()) return;
    OrderBlock block{{}, kind};
    for (const auto& n : list) {
      block.vars.push_back(names.size());
      names.push_back(n);
      roles.push_back(role);
    }
    blocks.push_back(std::move(block));
  };
  add_block(slack, VarRole::slack, BlockKind::lex);
  add_block(vars, VarRole::variable, var_kind);
  add_block(params, VarRole::parameter, BlockKind::lex);
  std::size_t n = names.size();
  return RingPtr(new Ring(std::move(names), std::move(roles),
                          MonomialOrder(std::move(blocks), n)));
}

RingPtr Ring::make_custom(std::vector<std::string> names,
                          std::vector<VarRole> roles, MonomialOrder order) {
  if (names.size() != roles.size()) {
    throw PreconditionError("names and roles differ in length");
  }
  return RingPtr(new Ring(std::move(names), std::move(roles), std::move(order)));
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return RingPtr(new Ring(names_, roles_, std::move(order)));
}

RingPtr Ring::with_roles_and_order(std::vector<VarRole> roles,
                                   MonomialOrder order) const {
  return RingPtr(new Ring(names_, std::move(roles), std::move(order)));
}

RingPtr Ring::parameter_free() const {
  if (num_parameters() == 0) return shared_from_this();
  std::call_once(free_once_, [this] {
    std::vector<std::size_t> remap(names_.size(), kMaxVars);
    std::vector<std::string> names;
    std::vector<VarRole> roles;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (roles_[i] == VarRole::parameter) continue;
      remap[i] = names.size();
      names.push_back(names_[i]);
      roles.push_back(roles_[i]);
    }
    std::vector<OrderBlock> blocks;
    for (const auto& block : order_.blocks()) {
      OrderBlock nb{{}, block.kind};
      for (auto v : block.vars) {
        if (remap[v] != kMaxVars) nb.vars.push_back(remap[v]);
      }
      if (!nb.vars.empty()) blocks.push_back(std::move(nb));
    }
    std::size_t n = names.size();
    free_ring_ = RingPtr(new Ring(std::move(names), std::move(roles),
                                  MonomialOrder(std::move(blocks), n)));
  });
  return free_ring_;
}

RingPtr Ring::parameter_ring() const {
  if (non_parameter_indices().empty()) return shared_from_this();
  std::call_once(param_once_, [this] {
    std::vector<std::string> names;
    for (auto i : parameter_indices()) names.push_back(names_[i]);
    param_ring_ = make(names, {});
  });
  return param_ring_;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw PreconditionError("unknown variable '" + name + "'");
  return *idx;
}

std::vector<std::size_t> Ring::indices_with(VarRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Ring::non_parameter_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] != VarRole::parameter) out.push_back(i);
  }
  return out;
}

std::size_t Ring::num_parameters() const {
  return static_cast<std::size_t>(
      std::count(roles_.begin(), roles_.end(), VarRole::parameter));
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (names_ == other.names_ && roles_ == other.roles_ &&
                            order_ == other.order_);
}

std::pair<Monomial, Monomial> Ring::split(const Monomial& m) const {
  Monomial x, a;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!m[i]) continue;
    if (roles_[i] == VarRole::parameter) {
      a.set(i, m[i]);
    } else {
      x.set(i, m[i]);
    }
  }
  return {x, a};
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  // Print in the order of the ring's blocks so output follows the order.
  for (const auto& block : order_.blocks()) {
    for (auto v : block.vars) {
      if (!m[v]) continue;
      if (!out.empty()) out += '*';
      out += names_[v];
      if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string Ring::fresh_name(const std::string& base) const {
  if (!index_of(base)) return base;
  for (int k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

}  // namespace cpdskit
