#include "profin/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "profin/errors.hpp"
#include "profin/structure.hpp"

namespace profin {

namespace {

bool is_prime_power(std::size_t n) { return n == 1 || prime_power_base(n) != 0; }

void sort_canonical(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), subgroup_less);
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, std::size_t max_count,
                                          const Caps& caps) {
  if (group->order() > caps.subgroup_order) {
    throw CapExceeded("subgroup enumeration order", caps.subgroup_order, group->order());
  }
  const std::size_t limit = std::min(max_count, caps.subgroup_count);

  std::map<std::vector<ElementId>, std::size_t> seen;
  std::vector<Subgroup> found;
  auto record = [&](Subgroup sub) -> bool {
    auto [it, inserted] = seen.try_emplace(sub.elements(), found.size());
    if (!inserted) return false;
    if (found.size() >= limit) throw CapExceeded("subgroup count", limit, found.size() + 1);
    found.push_back(std::move(sub));
    return true;
  };

  record(Subgroup::trivial(group));
  // Generators of the prime-power cyclic subgroups, one per subgroup.
  std::vector<ElementId> cyclic_gens;
  for (ElementId x = 1; x < group->order(); ++x) {
    if (!is_prime_power(group->element_order(x))) continue;
    ElementId gen[] = {x};
    if (record(generate(group, gen))) cyclic_gens.push_back(x);
  }
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (auto x : cyclic_gens) {
      if (found[i].contains(x)) continue;
      ElementId gen[] = {x};
      record(extend(found[i], gen));
    }
  }
  // Subgroups generated by non-prime-power elements are still joins of
  // prime-power cyclic subgroups, so the worklist above reaches them.
  sort_canonical(found);
  return found;
}

std::vector<Subgroup> enumerate_normal_subgroups(const GroupPtr& group) {
  std::vector<Subgroup> atoms;
  std::set<std::vector<ElementId>> atom_keys;
  for (const auto& cls : conjugacy_classes(group)) {
    Subgroup closure = normal_closure(group, cls.front());
    if (atom_keys.insert(closure.elements()).second) atoms.push_back(std::move(closure));
  }
  std::vector<std::vector<ElementId>> atom_gens;
  for (const auto& a : atoms) atom_gens.push_back(subgroup_generators(a));

  std::set<std::vector<ElementId>> keys;
  std::vector<Subgroup> found;
  auto record = [&](Subgroup sub) {
    if (keys.insert(sub.elements()).second) found.push_back(std::move(sub));
  };
  for (auto& a : atoms) record(a);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (atoms[j].is_subset_of(found[i])) continue;
      record(extend(found[i], atom_gens[j]));
    }
  }
  sort_canonical(found);
  return found;
}

SubgroupGroup as_group(const Subgroup& sub, std::string name) {
  const auto& parent = *sub.parent();
  const auto& elems = sub.elements();
  const auto n = elems.size();
  std::vector<ElementId> local(parent.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<ElementId>(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<std::uint16_t>(local[parent.mul(elems[a], elems[b])]);
    }
  }
  if (name.empty()) name = parent.name() + "<sub>";
  return {build_from_raw_table(std::move(name), n, std::move(table)), elems};
}

namespace {

// Depth-first search for a generating set of size `remaining` extending
// `chosen`, with later elements strictly increasing after the first.
bool find_generators(const GroupPtr& group, const Subgroup& target, const Subgroup& current,
                     std::size_t remaining, ElementId min_id) {
  if (current.size() == target.size()) return true;
  if (remaining == 0) return false;
  for (auto x : target.elements()) {
    if (x < min_id || current.contains(x)) continue;
    ElementId gen[] = {x};
    Subgroup next = extend(current, gen);
    if (remaining == 1 && next.size() != target.size()) continue;
    if (find_generators(group, target, next, remaining - 1, x + 1)) return true;
  }
  return false;
}

}  // namespace

std::size_t min_generating_size(const Subgroup& sub) {
  const auto& group = sub.parent();
  if (sub.size() == 1) return 0;
  for (auto x : sub.elements()) {
    if (group->element_order(x) == sub.size()) return 1;
  }
  // Conjugating a generating set by an element of H gives another one, so
  // one generator may be taken from a set of H-class representatives.
  std::vector<ElementId> reps;
  std::vector<bool> seen(group->order(), false);
  for (auto x : sub.elements()) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto h : sub.elements()) seen[group->conjugate(x, h)] = true;
  }
  for (std::size_t k = 2;; ++k) {
    for (auto first : reps) {
      if (first == 0) continue;
      ElementId gen[] = {first};
      Subgroup start = generate(group, gen);
      if (find_generators(group, sub, start, k - 1, 1)) return k;
    }
  }
}

std::size_t prufer_rank(const GroupPtr& group, const Caps& caps) {
  std::size_t rank = 0;
  for (const auto& sub : enumerate_subgroups(group, SIZE_MAX, caps)) {
    // A subgroup of order n needs at most log2(n) generators.
    std::size_t bound = 0;
    for (std::size_t s = sub.size(); s > 1; s /= 2) ++bound;
    if (bound <= rank) continue;
    rank = std::max(rank, min_generating_size(sub));
  }
  return rank;
}

SpreadResult conjugate_spread(const GroupPtr& group, const Caps& caps) {
  if (group->order() > caps.spread_order) {
    throw CapExceeded("conjugate spread order", caps.spread_order, group->order());
  }
  const auto n = group->order();
  SpreadResult result;
  std::vector<std::size_t> depth(n);
  std::vector<bool> in_set(n);
  for (ElementId g = 0; g < n; ++g) {
    // Conjugates of g and g^-1.
    std::fill(in_set.begin(), in_set.end(), false);
    std::vector<ElementId> conj;
    for (ElementId h = 0; h < n; ++h) {
      for (auto y : {group->conjugate(g, h), group->conjugate(group->inv(g), h)}) {
        if (!in_set[y]) {
          in_set[y] = true;
          conj.push_back(y);
        }
      }
    }
    std::sort(conj.begin(), conj.end());
    std::fill(depth.begin(), depth.end(), SIZE_MAX);
    std::vector<ElementId> frontier{0};
    depth[0] = 0;
    SpreadWitness witness{g, 0, 0};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      auto x = frontier[i];
      for (auto c : conj) {
        auto y = group->mul(x, c);
        if (depth[y] != SIZE_MAX) continue;
        depth[y] = depth[x] + 1;
        frontier.push_back(y);
        if (depth[y] > witness.depth || (depth[y] == witness.depth && y < witness.worst)) {
          witness.worst = y;
          witness.depth = depth[y];
        }
      }
    }
    result.spread = std::max(result.spread, witness.depth);
    result.witnesses.push_back(witness);
  }
  return result;
}

AutomorphismReport automorphism_group(const GroupPtr& group, const Caps& caps) {
  const auto n = group->order();
  if (n > caps.automorphism_order) {
    throw CapExceeded("automorphism order", caps.automorphism_order, n);
  }
  const auto gens = group->generators();
  std::vector<std::size_t> order(n);
  for (ElementId x = 0; x < n; ++x) order[x] = group->element_order(x);

  AutomorphismReport report;
  std::vector<ElementId> images(gens.size());
  constexpr auto unset = static_cast<ElementId>(-1);

  // Builds the map on <g_0..g_k> from the chosen images; fails on an
  // inconsistent edge or a repeated image.
  auto extend_map = [&](std::size_t k, std::vector<ElementId>& map) {
    map.assign(n, unset);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;
    std::vector<ElementId> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = queue[i];
      for (std::size_t j = 0; j <= k; ++j) {
        auto y = group->mul(x, gens[j]);
        auto img = group->mul(map[x], images[j]);
        if (map[y] == unset) {
          if (used[img]) return false;
          used[img] = true;
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<ElementId> map;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (report.automorphisms.size() >= caps.automorphism_count) {
        throw CapExceeded("automorphism count", caps.automorphism_count,
                          report.automorphisms.size() + 1);
      }
      extend_map(k - 1, map);
      report.automorphisms.emplace_back(group, group, map);
      return;
    }
    for (ElementId c = 1; c < n; ++c) {
      if (order[c] != order[gens[k]]) continue;
      images[k] = c;
      if (extend_map(k, map)) self(self, k + 1);
    }
  };
  if (gens.empty()) {
    report.automorphisms.emplace_back(group, group, std::vector<ElementId>{0});
  } else {
    search(search, 0);
  }
  std::sort(report.automorphisms.begin(), report.automorphisms.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map() < b.map(); });

  report.inner_count = n / center(group).size();
  report.normal_subgroups = enumerate_normal_subgroups(group);
  for (const auto& sub : report.normal_subgroups) {
    bool fixed = std::all_of(report.automorphisms.begin(), report.automorphisms.end(),
                             [&](const GroupHom& a) {
                               return std::all_of(sub.elements().begin(), sub.elements().end(),
                                                  [&](ElementId x) { return sub.contains(a(x)); });
                             });
    report.characteristic.push_back(fixed);
  }
  return report;
}

}  // namespace profin
