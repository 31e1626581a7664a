#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace profin {

/// A subset of the atom set, bit i standing for atom i.
using BoolElem = std::uint32_t;

/// The field of all subsets of a finite atom set, with symmetric difference
/// as + and intersection as multiplication.
class FiniteBooleanRing {
 public:
  static constexpr std::size_t kMaxAtoms = 20;

  /// 1 <= atoms <= 20.
  static FiniteBooleanRing with_atoms(std::size_t atoms);
  /// Quotients by the whole ring have no atoms; this constructor allows that.
  static FiniteBooleanRing degenerate_or(std::size_t atoms);

  std::size_t atom_count() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_; }
  BoolElem zero() const { return 0; }
  BoolElem one() const { return static_cast<BoolElem>(size() - 1); }
  BoolElem atom(std::size_t i) const { return BoolElem{1} << i; }
  bool contains(BoolElem x) const { return (x & ~one()) == 0; }

  static BoolElem add(BoolElem a, BoolElem b) { return a ^ b; }
  static BoolElem mul(BoolElem a, BoolElem b) { return a & b; }

  friend bool operator==(const FiniteBooleanRing&, const FiniteBooleanRing&) = default;

 private:
  explicit FiniteBooleanRing(std::size_t atoms) : atoms_(atoms) {}
  std::size_t atoms_ = 0;
};

/// An ideal of a finite Boolean ring. Every such ideal is principal: it is
/// the set of all subsets of its support.
class BooleanIdeal {
 public:
  /// The ideal generated by the given subsets.
  static BooleanIdeal generated(const FiniteBooleanRing& ring, std::span<const BoolElem> generators);
  /// Validates that `elements` is an ideal (contains 0, closed under + and
  /// under multiplication by ring elements). Throws PreconditionFailed.
  static BooleanIdeal from_elements(const FiniteBooleanRing& ring, std::span<const BoolElem> elements);
  static BooleanIdeal zero(const FiniteBooleanRing& ring) { return BooleanIdeal(ring, 0); }
  static BooleanIdeal whole(const FiniteBooleanRing& ring) { return BooleanIdeal(ring, ring.one()); }

  const FiniteBooleanRing& ring() const { return ring_; }
  /// Union of all members.
  BoolElem support() const { return support_; }
  bool contains(BoolElem x) const { return (x & ~support_) == 0; }
  std::size_t size() const;
  /// Members in increasing bitmask order.
  std::vector<BoolElem> elements() const;
  bool is_maximal() const;

  friend bool operator==(const BooleanIdeal&, const BooleanIdeal&) = default;

 private:
  BooleanIdeal(FiniteBooleanRing ring, BoolElem support) : ring_(ring), support_(support) {}
  FiniteBooleanRing ring_ = FiniteBooleanRing::degenerate_or(0);
  BoolElem support_ = 0;
};

/// Every ideal of the ring, ordered by support bitmask.
std::vector<BooleanIdeal> enumerate_ideals(const FiniteBooleanRing& ring);

/// B/S together with the projection A -> A + S.
struct BooleanQuotient {
  FiniteBooleanRing ring;
  /// Atoms of B that survive, in increasing order; atom j of the quotient is
  /// surviving_atoms[j] of B.
  std::vector<std::size_t> surviving_atoms;

  std::size_t atom_count() const { return ring.atom_count(); }
  BoolElem project(BoolElem a) const;
};

BooleanQuotient quotient_ring(const FiniteBooleanRing& ring, const BooleanIdeal& ideal);

/// Maximal ideals: one per atom, namely all subsets missing that atom.
std::vector<BooleanIdeal> stone_points(const FiniteBooleanRing& ring);

/// Ring embedding given by the image of each atom (images pairwise disjoint,
/// covering the codomain's atom set).
struct RingEmbedding {
  FiniteBooleanRing domain;
  FiniteBooleanRing codomain;
  std::vector<BoolElem> atom_images;

  BoolElem operator()(BoolElem a) const;
};

/// Exhaustive check that the embedding preserves + and multiplication and is injective.
bool verify_embedding(const RingEmbedding& embedding);

/// Finite levels of an atomless Boolean ring: every step splits each atom in two.
struct RefinementChain {
  /// Which countable atomless ring the chain is meant to approximate; the
  /// finite levels are the same either way.
  enum class Limit { without_identity, with_identity };
  Limit limit = Limit::with_identity;
  std::vector<FiniteBooleanRing> rings;
  std::vector<RingEmbedding> embeddings;
};

/// Throws CapExceeded if a level would exceed 20 atoms or steps > 10.
RefinementChain refine_chain(std::size_t start_atoms, std::size_t steps,
                             RefinementChain::Limit limit = RefinementChain::Limit::with_identity);

/// A Boolean ring with named ideals I_C, one per closed set C of a finite
/// lattice of closed subsets of the Stone space.
class AugmentedBooleanAlgebra {
 public:
  AugmentedBooleanAlgebra(FiniteBooleanRing ring, std::vector<std::string> labels,
                          std::vector<BooleanIdeal> ideals);

  const FiniteBooleanRing& ring() const { return ring_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<BooleanIdeal>& ideals() const { return ideals_; }
  /// C = {maximal ideals containing I_C}, as a set of atoms.
  BoolElem closed_set(std::size_t label) const;
  /// Builds the augmented algebra from closed sets given as atom masks.
  static AugmentedBooleanAlgebra from_closed_sets(FiniteBooleanRing ring, std::vector<std::string> labels,
                                                  std::span<const BoolElem> closed_sets);

 private:
  FiniteBooleanRing ring_;
  std::vector<std::string> labels_;
  std::vector<BooleanIdeal> ideals_;
};

}  // namespace profin
