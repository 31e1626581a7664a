#pragma once

#include <vector>

#include "profin/group.hpp"

namespace profin {

/// All subgroups by cyclic extension: start from the cyclic subgroups of
/// prime-power order and repeatedly join one more of them until no new
/// subgroup appears. Sorted by subgroup_less.
///
/// Throws CapExceeded when |G| > caps.subgroup_order or the number of
/// subgroups passes min(max_count, caps.subgroup_count).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, std::size_t max_count = SIZE_MAX,
                                          const Caps& caps = default_caps());

/// All normal subgroups as the join-closure of the normal closures of the
/// conjugacy classes. Sorted by subgroup_less.
std::vector<Subgroup> enumerate_normal_subgroups(const GroupPtr& group);

/// A subgroup relabelled as a group in its own right.
struct SubgroupGroup {
  GroupPtr group;
  /// Element i of `group` is elements()[i] of the subgroup.
  std::vector<ElementId> embedding;
};
SubgroupGroup as_group(const Subgroup& sub, std::string name = {});

/// Minimum number of generators of a subgroup (0 for the trivial one).
std::size_t min_generating_size(const Subgroup& sub);

/// Max over all subgroups of the minimum number of generators.
std::size_t prufer_rank(const GroupPtr& group, const Caps& caps = default_caps());

struct SpreadWitness {
  ElementId element;   ///< the g whose normal closure is being covered
  ElementId worst;     ///< an element of <g>^G needing the most conjugates
  std::size_t depth;   ///< number of conjugates of g^{+-1} needed for `worst`
};

struct SpreadResult {
  std::size_t spread = 0;
  /// One entry per group element, in id order.
  std::vector<SpreadWitness> witnesses;
};

/// Least m such that every element of every normal closure <g>^G is a
/// product of at most m conjugates of g or g^-1; breadth-first ball growth.
SpreadResult conjugate_spread(const GroupPtr& group, const Caps& caps = default_caps());

struct AutomorphismReport {
  std::vector<GroupHom> automorphisms;
  std::size_t inner_count = 0;
  std::vector<Subgroup> normal_subgroups;
  /// characteristic[i] refers to normal_subgroups[i].
  std::vector<bool> characteristic;
};

/// Every automorphism by backtracking over images of a generating set
/// (images constrained to elements of the same order), plus the
/// characteristic subgroups among the normal ones.
AutomorphismReport automorphism_group(const GroupPtr& group, const Caps& caps = default_caps());

}  // namespace profin
