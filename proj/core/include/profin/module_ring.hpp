#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "profin/algebra.hpp"
#include "profin/gfp.hpp"
#include "profin/group.hpp"

namespace profin {

/// A right action of a finite group on GF(p)^dim: v^h = v * M_h with row
/// vectors, so M_{gh} = M_g M_h. Vectors are also addressed by integer ids
/// (base-p digits, coordinate 0 least significant).
class GModuleAction {
 public:
  /// Matrices for every element id, checked to form a homomorphism into GL.
  static GModuleAction create(GroupPtr group, std::uint32_t p, std::size_t dim,
                              std::vector<gfp::Matrix> matrices, const Caps& caps = default_caps());
  /// Matrices for a subset of elements (at least a generating set); the rest
  /// are filled in along products, then everything is checked.
  static GModuleAction from_partial(GroupPtr group, std::uint32_t p, std::size_t dim,
                                    const std::map<ElementId, gfp::Matrix>& given,
                                    const Caps& caps = default_caps());

  const GroupPtr& group() const { return group_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  std::size_t space_size() const { return space_size_; }
  const gfp::Matrix& matrix(ElementId h) const { return matrices_[h]; }

  gfp::Vec act(const gfp::Vec& v, ElementId h) const { return gfp::apply(v, matrices_[h], p_); }
  RingElem act_id(RingElem v, ElementId h) const;

  gfp::Vec decode(RingElem id) const;
  RingElem encode(const gfp::Vec& v) const;
  RingElem add(RingElem a, RingElem b) const;

 private:
  GModuleAction() = default;
  GroupPtr group_;
  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::size_t space_size_ = 1;
  std::vector<gfp::Matrix> matrices_;
};

struct OrbitSpan {
  bool spans = false;
  /// Group elements h, greedily by id, whose translates v^h form a basis of
  /// the span of the orbit.
  std::vector<ElementId> basis;
  std::size_t span_dim = 0;
};
OrbitSpan orbit_span_check(const GModuleAction& action, const gfp::Vec& v);

struct TranslateDecomposition {
  /// w = sum of v^h over these elements (non-decreasing ids).
  std::vector<ElementId> terms;
  /// Max over all w of the minimal number of translates needed.
  std::size_t bound = 0;
};
/// Minimal-length sum of translates by breadth-first search, expanding
/// group elements in id order. Throws PreconditionFailed if v does not span.
TranslateDecomposition translate_decomposition(const GModuleAction& action, const gfp::Vec& v,
                                               const gfp::Vec& w);

struct RingConstruction;
/// Throws PreconditionFailed if the translates of v do not span V.
RingConstruction ring_construct(std::shared_ptr<const GModuleAction> action, const gfp::Vec& v,
                                const Caps& caps = default_caps());

/// V identified with GF(p)[S] / Ann(v); multiplication induced from the
/// group algebra, so v^h * v^k = v^(hk).
class ModuleRing {
 public:
  const GModuleAction& action() const { return *action_; }
  const gfp::Vec& generator() const { return v_; }
  std::size_t size() const { return size_; }
  RingElem add(RingElem a, RingElem b) const { return action_->add(a, b); }
  RingElem mul(RingElem a, RingElem b) const { return mul_[std::size_t{a} * size_ + b]; }
  RingElem one() const { return one_; }
  /// Nilpotency index bound: dimension plus one.
  std::size_t nilpotency_bound() const { return action_->dim() + 1; }
  bool is_commutative() const;
  bool is_associative() const;
  /// Throws PreconditionFailed if the ring is not commutative.
  FiniteCommutativeAlgebra to_algebra(std::string name = "module-ring") const;

 private:
  friend RingConstruction ring_construct(std::shared_ptr<const GModuleAction>, const gfp::Vec&, const Caps&);
  std::shared_ptr<const GModuleAction> action_;
  gfp::Vec v_;
  std::size_t size_ = 0;
  RingElem one_ = 0;
  std::vector<std::uint16_t> mul_;
};

/// Two representations of the same vector whose products with `left`
/// differ: left * rep and left * 0, where rep lies in Ann(v).
struct IllDefinedWitness {
  ElementId left;
  /// Coefficients over group elements of a group-algebra element in Ann(v).
  gfp::Vec annihilator_element;
  gfp::Vec product;
};

struct RingConstruction {
  std::optional<ModuleRing> ring;
  std::optional<IllDefinedWitness> witness;
  std::size_t annihilator_dim = 0;
  bool well_defined() const { return ring.has_value(); }
};

struct AgreementReport {
  std::size_t checked = 0;
  bool agrees = true;
  std::optional<std::pair<RingElem, RingElem>> mismatch;
};
/// Compares ring products with the sum of v^(h_i k_j) over minimal
/// decompositions of both factors: all pairs when size^2 <= 65536,
/// otherwise `samples` pseudo-random pairs from `seed`.
AgreementReport decomposition_agreement(const ModuleRing& ring, std::size_t samples = 2000,
                                        std::uint64_t seed = 1);

struct FaithfulnessReport {
  std::vector<ElementId> kernel;
  /// stabilizer_index[x] = |S : Stab(x)| for the vector with id x.
  std::vector<std::size_t> stabilizer_index;
  /// Some vector has stabilizer index |S|.
  bool has_regular_orbit = false;
  std::optional<RingElem> regular_vector;
};
FaithfulnessReport faithfulness_report(const GModuleAction& action);

}  // namespace profin
