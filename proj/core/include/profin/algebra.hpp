#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "profin/caps.hpp"
#include "profin/errors.hpp"

namespace profin {

using RingElem = std::uint32_t;

/// A finite commutative ring with identity, stored as full addition and
/// multiplication tables. Element 0 is the additive zero.
class FiniteCommutativeAlgebra {
 public:
  /// Validates the ring axioms exhaustively when size <= 256 (commutative,
  /// associative, distributive, additive group, identity present).
  static FiniteCommutativeAlgebra from_tables(std::string name, std::size_t size,
                                              std::vector<std::uint16_t> add,
                                              std::vector<std::uint16_t> mul,
                                              const Caps& caps = default_caps());
  /// Builds tables from callbacks without validation; for rings that are
  /// correct by construction.
  template <class Add, class Mul>
  static FiniteCommutativeAlgebra build(std::string name, std::size_t size, Add&& add, Mul&& mul,
                                        const Caps& caps = default_caps());

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  RingElem add(RingElem a, RingElem b) const { return add_[std::size_t{a} * size_ + b]; }
  RingElem mul(RingElem a, RingElem b) const { return mul_[std::size_t{a} * size_ + b]; }
  RingElem neg(RingElem a) const { return neg_[a]; }
  RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
  RingElem zero() const { return 0; }
  RingElem one() const { return one_; }
  /// Additive order of the identity.
  std::size_t characteristic() const { return characteristic_; }
  /// Upper bound on nilpotency indices: log2 of the size, rounded up, plus one.
  std::size_t nilpotency_bound() const;

  bool is_field() const;
  /// Exhaustive axiom check; returns a description of the first failure.
  std::optional<std::string> axiom_violation() const;

 private:
  FiniteCommutativeAlgebra() = default;
  void finish();

  std::string name_;
  std::size_t size_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<RingElem> neg_;
  RingElem one_ = 0;
  std::size_t characteristic_ = 0;
};

template <class Add, class Mul>
FiniteCommutativeAlgebra FiniteCommutativeAlgebra::build(std::string name, std::size_t size, Add&& add,
                                                         Mul&& mul, const Caps& caps) {
  if (size > caps.algebra_order) throw CapExceeded("algebra order", caps.algebra_order, size);
  FiniteCommutativeAlgebra r;
  r.name_ = std::move(name);
  r.size_ = size;
  r.add_.resize(size * size);
  r.mul_.resize(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      r.add_[a * size + b] = static_cast<std::uint16_t>(add(static_cast<RingElem>(a), static_cast<RingElem>(b)));
      r.mul_[a * size + b] = static_cast<std::uint16_t>(mul(static_cast<RingElem>(a), static_cast<RingElem>(b)));
    }
  }
  r.finish();
  return r;
}

/// GF(p^k) for p^k in {2, 3, 4, 5, 7, 8, 9}. Elements are encoded as
/// coefficient vectors in base p, so 0 and 1 are the field's zero and one.
FiniteCommutativeAlgebra finite_field(std::size_t q);
/// Field lookup by name: "GF2", "GF3", "GF4", "GF8", "GF9", ...
FiniteCommutativeAlgebra finite_field(const std::string& name);
/// Z/nZ.
FiniteCommutativeAlgebra integers_mod(std::size_t n);
/// The subfield {x : x^q = x} of a finite field, as element ids.
/// Throws PreconditionFailed if no subfield of that size exists.
std::vector<RingElem> subfield_elements(const FiniteCommutativeAlgebra& field, std::size_t q);
/// True iff `elements` is closed under +, -, *, inverses and contains 0, 1.
bool is_subfield(const FiniteCommutativeAlgebra& field, const std::vector<RingElem>& elements);

/// Raised when a ring that must be reduced has a nonzero nilpotent element.
class NilpotentElementFound : public Error {
 public:
  explicit NilpotentElementFound(RingElem witness)
      : Error("ring has a nonzero nilpotent element (id " + std::to_string(witness) + ")"),
        witness_(witness) {}
  RingElem witness() const { return witness_; }

 private:
  RingElem witness_;
};

struct NilpotentCheck {
  bool nilpotent_free = true;
  std::optional<RingElem> witness;
};

/// Exhaustive: tests x*x = 0 first, then repeated squaring up to the
/// nilpotency bound. Works for any ring type exposing size(), mul(),
/// nilpotency_bound() with element 0 as zero.
template <class Ring>
NilpotentCheck nilpotent_free_check(const Ring& ring) {
  const auto n = ring.size();
  for (RingElem x = 1; x < n; ++x) {
    if (ring.mul(x, x) == 0) return {false, x};
  }
  std::size_t steps = 0;
  for (std::size_t k = 1; k < ring.nilpotency_bound(); k *= 2) ++steps;
  for (RingElem x = 1; x < n; ++x) {
    RingElem y = x;
    for (std::size_t s = 0; s <= steps; ++s) {
      y = ring.mul(y, y);
      if (y == 0) return {false, x};
    }
  }
  return {true, std::nullopt};
}

/// One field factor e R of a reduced ring.
struct FieldFactor {
  RingElem idempotent;
  /// Members of e R as ids of the original ring; members[i] is element i of `field`.
  std::vector<RingElem> members;
  FiniteCommutativeAlgebra field;
  /// field element i -> element of the bundled GF(q), when q is bundled.
  std::vector<RingElem> iso_to_bundled;
};

struct Decomposition {
  std::vector<FieldFactor> factors;
  /// For each ring element x, its coordinates (e_i x) as local ids per factor.
  std::vector<std::vector<RingElem>> coordinates;
};

/// Splits a reduced finite commutative ring into fields along its primitive
/// idempotents and verifies that x -> (e_i x)_i is a ring isomorphism.
/// Throws NilpotentElementFound with a witness if the ring is not reduced.
Decomposition mr_decompose(const FiniteCommutativeAlgebra& ring);

/// Explicit field isomorphism between two fields of equal size, or empty.
std::vector<RingElem> find_field_isomorphism(const FiniteCommutativeAlgebra& from,
                                             const FiniteCommutativeAlgebra& to);

}  // namespace profin
