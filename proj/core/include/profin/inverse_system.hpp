#pragma once

#include <optional>
#include <vector>

#include "profin/group.hpp"
#include "profin/rational.hpp"
#include "profin/structure.hpp"

namespace profin {

/// A tower G_0 <- G_1 <- ... <- G_{k-1} of finite groups with surjective
/// projections; projections[n] maps level n+1 onto level n. The top level
/// (last) is the finest approximation.
class InverseSystem {
 public:
  static constexpr std::size_t kMaxLevels = 32;

  /// Validates homomorphism and surjectivity of every projection.
  static InverseSystem build(std::vector<GroupPtr> levels, std::vector<GroupHom> projections);

  const std::vector<GroupPtr>& levels() const { return levels_; }
  const std::vector<GroupHom>& projections() const { return projections_; }
  std::size_t depth() const { return levels_.size(); }
  const GroupPtr& top() const { return levels_.back(); }

  /// Composite projection from level `from` down to level `to` (to <= from).
  const GroupHom& composite(std::size_t from, std::size_t to) const;

 private:
  std::vector<GroupPtr> levels_;
  std::vector<GroupHom> projections_;
  /// composites_[from][to]
  std::vector<std::vector<GroupHom>> composites_;
};

/// Points of G/H: left cosets gH with minimal-id representatives.
struct CosetSpace {
  GroupPtr group;
  Subgroup subgroup;
  std::vector<ElementId> representatives;
  /// coset_of[g] = index of the coset gH.
  std::vector<std::uint32_t> coset_of;

  std::size_t size() const { return representatives.size(); }
  /// Point reached from point i by left multiplication with g.
  std::uint32_t act(ElementId g, std::uint32_t point) const {
    return coset_of[group->mul(g, representatives[point])];
  }
};

CosetSpace coset_space(const Subgroup& h);

struct CosetActionSystem {
  InverseSystem system;
  std::vector<CosetSpace> spaces;
  /// actions[n] maps G onto level n.
  std::vector<GroupHom> actions;
};

/// Level n is the permutation group induced by G on the disjoint union of
/// G/H_1, ..., G/H_{n+1} under left multiplication. Throws
/// PreconditionFailed if the chain is not descending.
CosetActionSystem coset_action_system(const GroupPtr& group, const std::vector<Subgroup>& chain,
                                      const Caps& caps = default_caps());

/// Images of a top-level subgroup at every level.
struct ClosureTrace {
  std::vector<Subgroup> images;
};
ClosureTrace closure_trace(const InverseSystem& system, const Subgroup& origin);

/// (image of N2)/(image of N1) at each level, with induced projections.
struct QuotientTrace {
  std::vector<GroupPtr> quotients;
  std::vector<GroupHom> projections;
  std::vector<std::size_t> orders() const;
};
/// Requires N1 <= N2 and N1 normal in the top level.
QuotientTrace quotient_trace(const InverseSystem& system, const Subgroup& n1, const Subgroup& n2);

struct CommutatorLevelReport {
  bool passed = true;
  std::optional<std::size_t> first_failing_level;
  /// |[K_n, L_n]| per level.
  std::vector<std::size_t> commutator_orders;
};
/// Checks image([K, L]) = [image(K), image(L)] at every level.
CommutatorLevelReport commutator_level_check(const InverseSystem& system, const Subgroup& k, const Subgroup& l);

/// |{(x, y) : xy = yx}| / |G_n|^2 at every level.
std::vector<Rational> cp_sequence(const InverseSystem& system, const Caps& caps = default_caps());

/// P <- P^2 <- ... <- P^depth, each projection forgetting the last coordinate.
InverseSystem direct_power_system(const GroupPtr& base, std::size_t depth, const Caps& caps = default_caps());

}  // namespace profin
