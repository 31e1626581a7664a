#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "profin/caps.hpp"
#include "profin/permutation.hpp"

namespace profin {

using ElementId = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Permutation realisation of a group: generator images plus the
/// permutation of every element, indexed by element id.
struct PermPresentation {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
};

/// A finite group given by its complete Cayley table.
///
/// Element 0 is always the identity. Instances are immutable and are shared
/// through GroupPtr; every Subgroup and GroupHom keeps its groups alive.
class FiniteGroup {
 public:
  /// Validates a Cayley table (Latin square, identity at 0, associativity by
  /// Light's test over a generating set) and builds the group.
  static GroupPtr from_table(std::string name, const std::vector<std::vector<ElementId>>& table,
                             const Caps& caps = default_caps());

  /// Enumerates the group generated by permutations by breadth-first
  /// saturation. Ids follow discovery order, identity first.
  static GroupPtr from_permutations(std::string name, std::size_t degree,
                                    const std::vector<Permutation>& generators,
                                    const Caps& caps = default_caps());

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  static constexpr ElementId identity() { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// x^-1 y^-1 x y
  ElementId commutator(ElementId x, ElementId y) const {
    return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
  }
  /// g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(inverse_[g], x), g); }
  ElementId power(ElementId x, std::int64_t exponent) const;
  std::size_t element_order(ElementId x) const;
  bool is_abelian() const;

  const std::optional<PermPresentation>& perm_presentation() const { return perm_; }

  /// Row of the Cayley table, table(a, .) .
  std::span<const std::uint16_t> row(ElementId a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  /// A small generating set found greedily in id order.
  std::vector<ElementId> generators() const;

  /// Copy with a new name; table and presentation are shared verbatim.
  GroupPtr renamed(std::string name) const;

 private:
  FiniteGroup() = default;
  void finish_inverses();

  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> inverse_;
  std::optional<PermPresentation> perm_;

  friend GroupPtr build_from_raw_table(std::string, std::size_t, std::vector<std::uint16_t>,
                                       std::optional<PermPresentation>);
};

/// Internal constructor used by products, quotients and materialisations
/// whose tables are correct by construction.
GroupPtr build_from_raw_table(std::string name, std::size_t order, std::vector<std::uint16_t> table,
                              std::optional<PermPresentation> perm = std::nullopt);

/// A subgroup stored as a sorted element list plus a membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  /// Trusted constructor: `elements` must already be a subgroup.
  Subgroup(GroupPtr parent, std::vector<ElementId> elements);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  /// Validating constructor (identity, closure, Lagrange).
  static Subgroup checked(GroupPtr parent, std::vector<ElementId> elements);

  const GroupPtr& parent() const { return parent_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  bool contains(ElementId x) const { return mask_[x]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return parent_ && elements_.size() == parent_->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<bool> mask_;
};

/// Canonical order of subgroups: by size, then lexicographic element list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

/// Homomorphism between two table groups.
class GroupHom {
 public:
  GroupHom() = default;
  /// Trusted constructor.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<ElementId> map);
  /// Verifies the homomorphism property on every pair.
  static GroupHom checked(GroupPtr source, GroupPtr target, std::vector<ElementId> map);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<ElementId>& map() const { return map_; }
  ElementId operator()(ElementId x) const { return map_[x]; }

  bool is_homomorphism() const;
  bool is_surjective() const;
  bool is_injective() const;
  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image(const Subgroup& sub) const;
  /// this then next: x -> next(this(x)).
  GroupHom then(const GroupHom& next) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<ElementId> map_;
};

/// Smallest subgroup containing `generators`.
Subgroup generate(const GroupPtr& group, std::span<const ElementId> generators);
/// Smallest subgroup containing `base` and `extra`.
Subgroup extend(const Subgroup& base, std::span<const ElementId> extra);
/// Greedy generating set of a subgroup, scanning elements in id order.
std::vector<ElementId> subgroup_generators(const Subgroup& sub);
/// Intersection of two subgroups of the same parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by all [a, b] with a in A, b in B.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// True iff g^-1 H g = H for all g in the parent.
bool is_normal(const Subgroup& h);

/// External direct product of groups; tuples are encoded in mixed radix
/// with factor 0 least significant, so id 0 is the identity tuple.
GroupPtr direct_product(std::string name, const std::vector<GroupPtr>& factors,
                        const Caps& caps = default_caps());
/// P^m as a direct product of m copies of P.
GroupPtr direct_power(const GroupPtr& base, std::size_t exponent, const Caps& caps = default_caps());

/// Decodes a direct-product element id into its coordinates.
std::vector<ElementId> decode_tuple(ElementId id, std::span<const std::size_t> radices);
ElementId encode_tuple(std::span<const ElementId> coords, std::span<const std::size_t> radices);

}  // namespace profin
