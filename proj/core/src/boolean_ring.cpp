#include "profin/boolean_ring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "profin/errors.hpp"

namespace profin {

FiniteBooleanRing FiniteBooleanRing::with_atoms(std::size_t atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw InvalidInput("Boolean ring needs 1.." + std::to_string(kMaxAtoms) + " atoms, got " +
                       std::to_string(atoms));
  }
  return FiniteBooleanRing(atoms);
}

FiniteBooleanRing FiniteBooleanRing::degenerate_or(std::size_t atoms) {
  if (atoms > kMaxAtoms) throw InvalidInput("Boolean ring has too many atoms");
  return FiniteBooleanRing(atoms);
}

BooleanIdeal BooleanIdeal::generated(const FiniteBooleanRing& ring, std::span<const BoolElem> generators) {
  BoolElem support = 0;
  for (auto g : generators) {
    if (!ring.contains(g)) throw InvalidInput("ideal generator is not a ring element");
    support |= g;
  }
  return BooleanIdeal(ring, support);
}

BooleanIdeal BooleanIdeal::from_elements(const FiniteBooleanRing& ring, std::span<const BoolElem> elements) {
  std::set<BoolElem> members(elements.begin(), elements.end());
  if (!members.count(0)) throw PreconditionFailed("not an ideal: 0 missing");
  for (auto a : members) {
    if (!ring.contains(a)) throw InvalidInput("ideal member is not a ring element");
    for (auto b : members) {
      if (!members.count(a ^ b)) throw PreconditionFailed("not an ideal: not closed under +");
    }
  }
  BoolElem support = 0;
  for (auto a : members) support |= a;
  // Closed under + and containing every subset of each member means it is
  // exactly the set of subsets of the support.
  for (auto a : members) {
    for (BoolElem sub = a;; sub = (sub - 1) & a) {
      if (!members.count(sub)) throw PreconditionFailed("not an ideal: not closed under multiplication");
      if (sub == 0) break;
    }
  }
  if (members.size() != (std::size_t{1} << std::popcount(support))) {
    throw PreconditionFailed("not an ideal");
  }
  return BooleanIdeal(ring, support);
}

std::size_t BooleanIdeal::size() const { return std::size_t{1} << std::popcount(support_); }

std::vector<BoolElem> BooleanIdeal::elements() const {
  std::vector<BoolElem> out;
  out.reserve(size());
  for (BoolElem sub = support_;; sub = (sub - 1) & support_) {
    out.push_back(sub);
    if (sub == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool BooleanIdeal::is_maximal() const {
  return std::popcount(static_cast<BoolElem>(ring_.one() & ~support_)) == 1;
}

std::vector<BooleanIdeal> enumerate_ideals(const FiniteBooleanRing& ring) {
  std::vector<BooleanIdeal> out;
  for (BoolElem s = 0; s <= ring.one(); ++s) {
    BoolElem gen[] = {s};
    out.push_back(BooleanIdeal::generated(ring, gen));
    if (s == ring.one()) break;
  }
  return out;
}

BoolElem BooleanQuotient::project(BoolElem a) const {
  BoolElem out = 0;
  for (std::size_t j = 0; j < surviving_atoms.size(); ++j) {
    if (a & (BoolElem{1} << surviving_atoms[j])) out |= BoolElem{1} << j;
  }
  return out;
}

BooleanQuotient quotient_ring(const FiniteBooleanRing& ring, const BooleanIdeal& ideal) {
  if (!(ideal.ring() == ring)) throw PreconditionFailed("ideal belongs to a different ring");
  std::vector<std::size_t> surviving;
  for (std::size_t i = 0; i < ring.atom_count(); ++i) {
    if (!(ideal.support() & ring.atom(i))) surviving.push_back(i);
  }
  return {FiniteBooleanRing::degenerate_or(surviving.size()), std::move(surviving)};
}

std::vector<BooleanIdeal> stone_points(const FiniteBooleanRing& ring) {
  std::vector<BooleanIdeal> points;
  for (std::size_t i = 0; i < ring.atom_count(); ++i) {
    BoolElem gen[] = {static_cast<BoolElem>(ring.one() & ~ring.atom(i))};
    points.push_back(BooleanIdeal::generated(ring, gen));
  }
  return points;
}

BoolElem RingEmbedding::operator()(BoolElem a) const {
  BoolElem out = 0;
  for (std::size_t i = 0; i < atom_images.size(); ++i) {
    if (a & (BoolElem{1} << i)) out |= atom_images[i];
  }
  return out;
}

bool verify_embedding(const RingEmbedding& e) {
  std::set<BoolElem> images;
  for (BoolElem a = 0; a <= e.domain.one(); ++a) {
    images.insert(e(a));
    for (BoolElem b = 0; b <= e.domain.one(); ++b) {
      if (e(FiniteBooleanRing::add(a, b)) != FiniteBooleanRing::add(e(a), e(b))) return false;
      if (e(FiniteBooleanRing::mul(a, b)) != FiniteBooleanRing::mul(e(a), e(b))) return false;
      if (b == e.domain.one()) break;
    }
    if (a == e.domain.one()) break;
  }
  return images.size() == e.domain.size() && e(e.domain.one()) == e.codomain.one();
}

RefinementChain refine_chain(std::size_t start_atoms, std::size_t steps, RefinementChain::Limit limit) {
  if (steps > 10) throw CapExceeded("refinement steps", 10, steps);
  if (start_atoms < 1) throw InvalidInput("refine_chain needs at least one atom");
  const auto final_atoms = start_atoms << steps;
  if (final_atoms > FiniteBooleanRing::kMaxAtoms) {
    throw CapExceeded("Boolean ring atoms", FiniteBooleanRing::kMaxAtoms, final_atoms);
  }
  RefinementChain chain;
  chain.limit = limit;
  chain.rings.push_back(FiniteBooleanRing::with_atoms(start_atoms));
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& prev = chain.rings.back();
    auto next = FiniteBooleanRing::with_atoms(prev.atom_count() * 2);
    std::vector<BoolElem> images;
    for (std::size_t i = 0; i < prev.atom_count(); ++i) images.push_back(next.atom(2 * i) | next.atom(2 * i + 1));
    chain.embeddings.push_back({prev, next, std::move(images)});
    chain.rings.push_back(next);
  }
  return chain;
}

AugmentedBooleanAlgebra::AugmentedBooleanAlgebra(FiniteBooleanRing ring, std::vector<std::string> labels,
                                                 std::vector<BooleanIdeal> ideals)
    : ring_(ring), labels_(std::move(labels)), ideals_(std::move(ideals)) {
  if (labels_.size() != ideals_.size()) throw InvalidInput("augmented algebra: label/ideal count mismatch");
  std::set<BoolElem> closed;
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (!(ideals_[i].ring() == ring_)) throw InvalidInput("augmented algebra: ideal from another ring");
    closed.insert(closed_set(i));
  }
  if (closed.size() != ideals_.size()) throw InvalidInput("augmented algebra: repeated closed set");
  for (auto a : closed) {
    for (auto b : closed) {
      if (!closed.count(a & b) || !closed.count(a | b)) {
        throw InvalidInput("augmented algebra: closed sets do not form a lattice");
      }
    }
  }
}

BoolElem AugmentedBooleanAlgebra::closed_set(std::size_t label) const {
  return ring_.one() & ~ideals_.at(label).support();
}

AugmentedBooleanAlgebra AugmentedBooleanAlgebra::from_closed_sets(FiniteBooleanRing ring,
                                                                  std::vector<std::string> labels,
                                                                  std::span<const BoolElem> closed_sets) {
  std::vector<BooleanIdeal> ideals;
  for (auto c : closed_sets) {
    if (!ring.contains(c)) throw InvalidInput("closed set mentions a missing atom");
    BoolElem gen[] = {static_cast<BoolElem>(ring.one() & ~c)};
    ideals.push_back(BooleanIdeal::generated(ring, gen));
  }
  return AugmentedBooleanAlgebra(ring, std::move(labels), std::move(ideals));
}

}  // namespace profin
