#pragma once

#include <optional>
#include <span>
#include <vector>

#include "profin/algebra.hpp"
#include "profin/boolean_ring.hpp"
#include "profin/group.hpp"
#include "profin/structure.hpp"

namespace profin {

/// g_A: the function taking value g on every point of A and 1 elsewhere.
struct BPTerm {
  ElementId g;
  BoolElem support;
  friend bool operator==(const BPTerm&, const BPTerm&) = default;
};

/// Element of a Boolean power in normal form: distinct non-identity values
/// with pairwise disjoint nonzero supports, sorted by value id.
struct BPElement {
  std::vector<BPTerm> terms;
  bool is_identity() const { return terms.empty(); }
  friend bool operator==(const BPElement&, const BPElement&) = default;
};

/// P^B for a finite group P and a finite Boolean ring B, computed atom-wise.
class BooleanPowerGroup {
 public:
  BooleanPowerGroup(GroupPtr base, FiniteBooleanRing ring);

  const GroupPtr& base() const { return base_; }
  const FiniteBooleanRing& ring() const { return ring_; }

  /// Unique normal form of an arbitrary product of terms, read left to right.
  BPElement normalize(std::span<const BPTerm> raw) const;
  BPElement multiply(const BPElement& x, const BPElement& y) const;
  BPElement inverse(const BPElement& x) const;
  BPElement identity() const { return {}; }

  /// Value at each atom.
  std::vector<ElementId> evaluate(const BPElement& x) const;
  BPElement from_values(std::span<const ElementId> values) const;

 private:
  GroupPtr base_;
  FiniteBooleanRing ring_;
};

/// Same as BooleanPowerGroup::normalize.
BPElement bp_normalize(const BooleanPowerGroup& power, std::span<const BPTerm> raw);
/// Throws InvalidInput if the two elements mention values outside the base
/// group or supports outside the ring.
BPElement bp_multiply(const BooleanPowerGroup& power, const BPElement& x, const BPElement& y);

/// P^B as a Cayley-table group. Element ids are the atom-value tuples in
/// mixed radix (atom 0 least significant), i.e. the direct power P^m.
class MaterializedPower {
 public:
  MaterializedPower(BooleanPowerGroup power, GroupPtr group);

  const BooleanPowerGroup& power() const { return power_; }
  const GroupPtr& group() const { return group_; }
  ElementId id_of(const BPElement& x) const;
  BPElement element(ElementId id) const;
  std::vector<ElementId> values(ElementId id) const;

 private:
  BooleanPowerGroup power_;
  GroupPtr group_;
  std::vector<std::size_t> radices_;
};

/// Throws CapExceeded if |P|^atoms > caps.order.
MaterializedPower materialize_bp_group(const GroupPtr& base, const FiniteBooleanRing& ring,
                                       const Caps& caps = default_caps());

/// G^S: elements whose support lies in S.
Subgroup ideal_normal_subgroup(const MaterializedPower& power, const BooleanIdeal& ideal);

struct IdealCorrespondenceReport {
  std::vector<Subgroup> normal_subgroups;
  /// For each normal subgroup, the ideal S with G^S equal to it, if any.
  std::vector<std::optional<BooleanIdeal>> matching_ideal;
  std::size_t ideal_count = 0;
  /// Every normal subgroup has ideal form and every ideal gives a distinct one.
  bool holds = false;
  /// Normal subgroups with no ideal form (negative evidence).
  std::vector<Subgroup> non_ideal;
};

IdealCorrespondenceReport verify_ideal_correspondence(const GroupPtr& base, const FiniteBooleanRing& ring,
                                                      const Caps& caps = default_caps());

struct BPQuotientIso {
  QuotientResult quotient;
  /// Number of atoms of B/S.
  std::size_t m = 0;
  GroupPtr direct_power;
  /// quotient group -> P^m, built by restricting coset representatives to
  /// the atoms surviving in B/S; checked to be a bijective homomorphism.
  GroupHom iso;
};

/// P^B / G^S ~= P^m with m the atom count of B/S.
BPQuotientIso bp_quotient_iso(const GroupPtr& base, const FiniteBooleanRing& ring, const BooleanIdeal& ideal,
                              const Caps& caps = default_caps());

/// Filtered Boolean power of a finite field: functions f on the atoms with
/// f(C) inside tau(C) for every closed set C of the augmented algebra.
struct FilteredPowerSpec {
  FiniteCommutativeAlgebra field;
  AugmentedBooleanAlgebra algebra;
  /// tau[i] is the subfield assigned to algebra.labels()[i], as element ids.
  std::vector<std::vector<RingElem>> tau;
};

struct FilteredPower {
  FiniteCommutativeAlgebra algebra;
  /// Element i of `algebra` as a function atom -> field element.
  std::vector<std::vector<RingElem>> functions;
};

/// Throws PreconditionFailed if some tau(C) is not a subfield or tau is not
/// order-preserving; CapExceeded if |F|^atoms > caps.order.
FilteredPower filtered_power(const FilteredPowerSpec& spec, const Caps& caps = default_caps());

/// F^B with no constraints.
FilteredPower ring_power(const FiniteCommutativeAlgebra& field, const FiniteBooleanRing& ring,
                         const Caps& caps = default_caps());

struct RingIdealReport {
  std::size_t ideal_count = 0;
  std::size_t boolean_ideal_count = 0;
  bool holds = false;
};

/// Every ideal of F^B is F^S for an ideal S of B: enumerates all ideals of
/// F^B as sums of principal ideals and compares.
RingIdealReport verify_ring_ideal_correspondence(const FiniteCommutativeAlgebra& field,
                                                 const FiniteBooleanRing& ring,
                                                 const Caps& caps = default_caps());

}  // namespace profin
