#pragma once

#include <cstdint>
#include <vector>

#include "profin/group.hpp"

namespace profin {

enum class SeriesKind { derived, lower_central };

/// A descending series G = terms[0] >= terms[1] >= ... that has stabilised:
/// the last term equals the next one the recursion would produce.
struct Series {
  SeriesKind kind = SeriesKind::derived;
  std::vector<Subgroup> terms;

  const Subgroup& last() const { return terms.back(); }
  bool reaches_trivial() const { return terms.back().is_trivial(); }
};

Series series(const GroupPtr& group, SeriesKind kind);
bool is_perfect(const GroupPtr& group);
bool is_soluble(const GroupPtr& group);
bool is_nilpotent(const GroupPtr& group);
/// Nilpotency class, or -1 if the group is not nilpotent. The trivial group has class 0.
int nilpotency_class(const GroupPtr& group);

/// {g : gs = sg for every s in `set`}; the whole group for an empty set.
Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> set);
Subgroup center(const GroupPtr& group);

/// Orbits of the conjugation action, each sorted, ordered by minimal element.
std::vector<std::vector<ElementId>> conjugacy_classes(const GroupPtr& group);

/// Smallest normal subgroup containing `g`.
Subgroup normal_closure(const GroupPtr& group, ElementId g);
/// Smallest normal subgroup containing every element of `set`.
Subgroup normal_closure(const GroupPtr& group, std::span<const ElementId> set);

/// Largest normal subgroup of the parent contained in `h` (intersection of conjugates).
Subgroup core(const Subgroup& h);

/// Quotient G/N together with the projection G -> G/N.
struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  /// Coset representative (minimal element id) of each quotient element.
  std::vector<ElementId> representatives;
};

/// Cosets are numbered by increasing minimal representative, so the
/// identity coset N is element 0. Throws PreconditionFailed if N is not normal.
QuotientResult quotient(const Subgroup& normal_subgroup);

/// Subgroup H N of the parent (requires N normal or H normalising N).
Subgroup product(const Subgroup& h, const Subgroup& n);

/// A maximal p-subgroup found by repeated extension. Throws
/// PreconditionFailed if `p` is not prime. When the group is nilpotent the
/// result is checked to be normal (hence the unique Sylow p-subgroup).
Subgroup sylow_subgroup(const GroupPtr& group, std::uint32_t p);

bool is_prime(std::uint64_t n);
/// If n = p^k with p prime and k >= 1 returns p, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace profin
