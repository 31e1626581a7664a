#include "profin/inverse_system.hpp"

#include <algorithm>
#include <map>

#include "profin/errors.hpp"
#include "profin/lattice.hpp"
#include "profin/measure.hpp"

namespace profin {

InverseSystem InverseSystem::build(std::vector<GroupPtr> levels, std::vector<GroupHom> projections) {
  if (levels.empty()) throw InvalidInput("inverse system needs at least one level");
  if (levels.size() > kMaxLevels) throw CapExceeded("tower length", kMaxLevels, levels.size());
  if (projections.size() + 1 != levels.size()) {
    throw InvalidInput("inverse system needs exactly one projection between consecutive levels");
  }
  for (std::size_t n = 0; n < projections.size(); ++n) {
    const auto& p = projections[n];
    if (p.source() != levels[n + 1] || p.target() != levels[n]) {
      throw InvalidInput("projection " + std::to_string(n) + " does not map level " + std::to_string(n + 1) +
                         " to level " + std::to_string(n));
    }
    if (!p.is_homomorphism()) {
      throw PreconditionFailed("projection " + std::to_string(n) + " is not a homomorphism");
    }
    if (!p.is_surjective()) throw PreconditionFailed("projection " + std::to_string(n) + " is not surjective");
  }
  InverseSystem sys;
  sys.levels_ = std::move(levels);
  sys.projections_ = std::move(projections);
  const auto k = sys.levels_.size();
  sys.composites_.resize(k);
  for (std::size_t from = 0; from < k; ++from) {
    std::vector<ElementId> id(sys.levels_[from]->order());
    for (ElementId x = 0; x < id.size(); ++x) id[x] = x;
    sys.composites_[from].resize(from + 1);
    sys.composites_[from][from] = GroupHom(sys.levels_[from], sys.levels_[from], std::move(id));
    for (std::size_t to = from; to-- > 0;) {
      sys.composites_[from][to] = sys.composites_[from][to + 1].then(sys.projections_[to]);
    }
  }
  return sys;
}

const GroupHom& InverseSystem::composite(std::size_t from, std::size_t to) const {
  if (from >= levels_.size() || to > from) throw InvalidInput("bad composite level range");
  return composites_[from][to];
}

CosetSpace coset_space(const Subgroup& h) {
  const auto& group = h.parent();
  CosetSpace space{group, h, {}, std::vector<std::uint32_t>(group->order(), UINT32_MAX)};
  for (ElementId g = 0; g < group->order(); ++g) {
    if (space.coset_of[g] != UINT32_MAX) continue;
    auto index = static_cast<std::uint32_t>(space.representatives.size());
    space.representatives.push_back(g);
    for (auto x : h.elements()) space.coset_of[group->mul(g, x)] = index;
  }
  return space;
}

CosetActionSystem coset_action_system(const GroupPtr& group, const std::vector<Subgroup>& chain,
                                      const Caps& caps) {
  if (chain.empty()) throw InvalidInput("coset_action_system: empty chain");
  if (chain.size() > InverseSystem::kMaxLevels) {
    throw CapExceeded("tower length", InverseSystem::kMaxLevels, chain.size());
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].parent() != group) throw InvalidInput("coset_action_system: subgroup of another group");
    if (i > 0 && !chain[i].is_subset_of(chain[i - 1])) {
      throw PreconditionFailed("coset_action_system: chain is not descending");
    }
  }
  CosetActionSystem out{InverseSystem{}, {}, {}};
  for (const auto& h : chain) out.spaces.push_back(coset_space(h));

  const auto gens = group->generators();
  std::vector<GroupPtr> levels;
  std::vector<std::vector<ElementId>> preimage;  // per level: level element -> some g
  std::size_t degree = 0;
  for (std::size_t n = 0; n < chain.size(); ++n) {
    degree += out.spaces[n].size();
    // sigma_g(x) = g^-1 x makes g -> sigma_g a homomorphism for the
    // left-factor-first permutation product.
    auto sigma = [&](ElementId g) {
      std::vector<std::uint32_t> images;
      images.reserve(degree);
      std::uint32_t offset = 0;
      for (std::size_t s = 0; s <= n; ++s) {
        const auto& space = out.spaces[s];
        for (std::uint32_t pt = 0; pt < space.size(); ++pt) images.push_back(offset + space.act(group->inv(g), pt));
        offset += static_cast<std::uint32_t>(space.size());
      }
      return Permutation(std::move(images));
    };
    std::vector<Permutation> perm_gens;
    for (auto g : gens) perm_gens.push_back(sigma(g));
    auto level = FiniteGroup::from_permutations(group->name() + "@X" + std::to_string(n + 1), degree, perm_gens, caps);
    std::unordered_map<Permutation, ElementId, PermutationHash> index;
    const auto& elems = level->perm_presentation()->elements;
    for (ElementId i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    std::vector<ElementId> map(group->order());
    std::vector<ElementId> pre(level->order(), UINT32_MAX);
    for (ElementId g = 0; g < group->order(); ++g) {
      map[g] = index.at(sigma(g));
      if (pre[map[g]] == UINT32_MAX) pre[map[g]] = g;
    }
    out.actions.emplace_back(group, level, std::move(map));
    preimage.push_back(std::move(pre));
    levels.push_back(std::move(level));
  }
  std::vector<GroupHom> projections;
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    std::vector<ElementId> map(levels[n + 1]->order());
    for (ElementId y = 0; y < map.size(); ++y) map[y] = out.actions[n](preimage[n + 1][y]);
    projections.emplace_back(levels[n + 1], levels[n], std::move(map));
  }
  out.system = InverseSystem::build(std::move(levels), std::move(projections));
  return out;
}

ClosureTrace closure_trace(const InverseSystem& system, const Subgroup& origin) {
  if (origin.parent() != system.top()) throw InvalidInput("closure_trace: subgroup is not of the top level");
  ClosureTrace trace;
  const auto top = system.depth() - 1;
  for (std::size_t n = 0; n < system.depth(); ++n) trace.images.push_back(system.composite(top, n).image(origin));
  return trace;
}

std::vector<std::size_t> QuotientTrace::orders() const {
  std::vector<std::size_t> out;
  for (const auto& q : quotients) out.push_back(q->order());
  return out;
}

QuotientTrace quotient_trace(const InverseSystem& system, const Subgroup& n1, const Subgroup& n2) {
  if (!n1.is_subset_of(n2)) throw PreconditionFailed("quotient_trace: N1 is not contained in N2");
  if (!is_normal(n1)) throw PreconditionFailed("quotient_trace: N1 is not normal in the top level");
  auto lower = closure_trace(system, n1);
  auto upper = closure_trace(system, n2);
  QuotientTrace trace;
  // Per level: level element -> coset index in image(N2)/image(N1).
  std::vector<std::vector<ElementId>> coset_index;
  std::vector<std::vector<ElementId>> coset_rep;
  for (std::size_t n = 0; n < system.depth(); ++n) {
    auto b = as_group(upper.images[n]);
    std::vector<ElementId> local(system.levels()[n]->order(), UINT32_MAX);
    for (ElementId i = 0; i < b.embedding.size(); ++i) local[b.embedding[i]] = i;
    std::vector<ElementId> a_local;
    for (auto x : lower.images[n].elements()) a_local.push_back(local[x]);
    std::sort(a_local.begin(), a_local.end());
    auto q = quotient(Subgroup(b.group, std::move(a_local)));
    std::vector<ElementId> index(system.levels()[n]->order(), UINT32_MAX);
    for (ElementId i = 0; i < b.embedding.size(); ++i) index[b.embedding[i]] = q.projection(i);
    std::vector<ElementId> reps;
    for (auto r : q.representatives) reps.push_back(b.embedding[r]);
    coset_index.push_back(std::move(index));
    coset_rep.push_back(std::move(reps));
    trace.quotients.push_back(q.group);
  }
  for (std::size_t n = 0; n + 1 < system.depth(); ++n) {
    std::vector<ElementId> map(trace.quotients[n + 1]->order());
    for (ElementId c = 0; c < map.size(); ++c) map[c] = coset_index[n][system.projections()[n](coset_rep[n + 1][c])];
    trace.projections.emplace_back(trace.quotients[n + 1], trace.quotients[n], std::move(map));
  }
  return trace;
}

CommutatorLevelReport commutator_level_check(const InverseSystem& system, const Subgroup& k, const Subgroup& l) {
  if (k.parent() != system.top() || l.parent() != system.top()) {
    throw InvalidInput("commutator_level_check: subgroups must belong to the top level");
  }
  CommutatorLevelReport report;
  const auto top = system.depth() - 1;
  const auto kl = commutator_subgroup(k, l);
  for (std::size_t n = 0; n < system.depth(); ++n) {
    const auto& proj = system.composite(top, n);
    auto lhs = proj.image(kl);
    auto rhs = commutator_subgroup(proj.image(k), proj.image(l));
    report.commutator_orders.push_back(rhs.size());
    if (!(lhs == rhs) && report.passed) {
      report.passed = false;
      report.first_failing_level = n;
    }
  }
  return report;
}

std::vector<Rational> cp_sequence(const InverseSystem& system, const Caps& caps) {
  std::vector<Rational> out;
  for (const auto& level : system.levels()) out.push_back(commuting_pairs(level, caps).fraction);
  return out;
}

InverseSystem direct_power_system(const GroupPtr& base, std::size_t depth, const Caps& caps) {
  if (depth == 0) throw InvalidInput("direct_power_system: depth must be positive");
  std::size_t order = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    order *= base->order();
    if (order > caps.order) throw CapExceeded("direct power order", caps.order, order);
  }
  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= depth; ++k) levels.push_back(k == 1 ? base : direct_power(base, k, caps));
  std::vector<GroupHom> projections;
  for (std::size_t k = 0; k + 1 < depth; ++k) {
    const auto lower = levels[k]->order();
    std::vector<ElementId> map(levels[k + 1]->order());
    for (ElementId x = 0; x < map.size(); ++x) map[x] = static_cast<ElementId>(x % lower);
    projections.emplace_back(levels[k + 1], levels[k], std::move(map));
  }
  return InverseSystem::build(std::move(levels), std::move(projections));
}

}  // namespace profin
