#include "profin/structure.hpp"

#include <algorithm>

#include "profin/errors.hpp"

namespace profin {

Series series(const GroupPtr& group, SeriesKind kind) {
  Series result;
  result.kind = kind;
  const Subgroup whole = Subgroup::whole(group);
  result.terms.push_back(whole);
  while (true) {
    const Subgroup& current = result.terms.back();
    Subgroup next = kind == SeriesKind::derived ? commutator_subgroup(current, current)
                                                : commutator_subgroup(whole, current);
    if (next.size() == current.size()) break;
    result.terms.push_back(std::move(next));
  }
  return result;
}

bool is_perfect(const GroupPtr& group) {
  auto whole = Subgroup::whole(group);
  return commutator_subgroup(whole, whole).size() == group->order();
}

bool is_soluble(const GroupPtr& group) { return series(group, SeriesKind::derived).reaches_trivial(); }

bool is_nilpotent(const GroupPtr& group) { return nilpotency_class(group) >= 0; }

int nilpotency_class(const GroupPtr& group) {
  auto lcs = series(group, SeriesKind::lower_central);
  if (!lcs.reaches_trivial()) return -1;
  return static_cast<int>(lcs.terms.size()) - 1;
}

Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> set) {
  std::vector<ElementId> out;
  for (ElementId g = 0; g < group->order(); ++g) {
    bool commutes = std::all_of(set.begin(), set.end(),
                                [&](ElementId s) { return group->mul(g, s) == group->mul(s, g); });
    if (commutes) out.push_back(g);
  }
  return Subgroup(group, std::move(out));
}

Subgroup center(const GroupPtr& group) {
  auto gens = group->generators();
  return centralizer(group, gens);
}

std::vector<std::vector<ElementId>> conjugacy_classes(const GroupPtr& group) {
  const auto n = group->order();
  const auto gens = group->generators();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<ElementId> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto g : gens) {
        auto y = group->conjugate(orbit[i], g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

Subgroup normal_closure(const GroupPtr& group, ElementId g) {
  ElementId set[] = {g};
  return normal_closure(group, set);
}

Subgroup normal_closure(const GroupPtr& group, std::span<const ElementId> set) {
  const auto gens = group->generators();
  Subgroup current = generate(group, set);
  // Close under conjugation by the group generators until stable.
  while (true) {
    std::vector<ElementId> missing;
    for (auto x : current.elements()) {
      for (auto g : gens) {
        auto y = group->conjugate(x, g);
        if (!current.contains(y)) missing.push_back(y);
      }
    }
    if (missing.empty()) return current;
    current = extend(current, missing);
  }
}

Subgroup core(const Subgroup& h) {
  const auto& group = h.parent();
  std::vector<bool> keep(group->order(), false);
  for (auto x : h.elements()) keep[x] = true;
  for (ElementId g = 0; g < group->order(); ++g) {
    for (auto x : h.elements()) {
      if (keep[x] && !h.contains(group->conjugate(x, g))) keep[x] = false;
    }
  }
  // x lies in every conjugate g H g^-1 iff g^-1 x g lies in H for all g.
  std::vector<ElementId> out;
  for (auto x : h.elements()) {
    if (keep[x]) out.push_back(x);
  }
  return Subgroup(group, std::move(out));
}

QuotientResult quotient(const Subgroup& n) {
  if (!is_normal(n)) throw PreconditionFailed("quotient: subgroup is not normal");
  const auto& group = n.parent();
  const auto order = group->order();
  std::vector<ElementId> coset_of(order, static_cast<ElementId>(-1));
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < order; ++g) {
    if (coset_of[g] != static_cast<ElementId>(-1)) continue;
    auto index = static_cast<ElementId>(reps.size());
    reps.push_back(g);
    for (auto x : n.elements()) coset_of[group->mul(g, x)] = index;
  }
  const auto q = reps.size();
  std::vector<std::uint16_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = static_cast<std::uint16_t>(coset_of[group->mul(reps[a], reps[b])]);
    }
  }
  auto qgroup = build_from_raw_table(group->name() + "/N", q, std::move(table));
  GroupHom projection(group, qgroup, std::move(coset_of));
  return {qgroup, std::move(projection), std::move(reps)};
}

Subgroup product(const Subgroup& h, const Subgroup& n) {
  const auto& group = h.parent();
  std::vector<bool> mask(group->order(), false);
  std::vector<ElementId> out;
  for (auto a : h.elements()) {
    for (auto b : n.elements()) {
      auto x = group->mul(a, b);
      if (!mask[x]) {
        mask[x] = true;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup(group, std::move(out));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

namespace {
bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}
}  // namespace

Subgroup sylow_subgroup(const GroupPtr& group, std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionFailed("sylow_subgroup: " + std::to_string(p) + " is not prime");
  Subgroup current = Subgroup::trivial(group);
  bool grown = true;
  while (grown) {
    grown = false;
    for (ElementId x = 1; x < group->order(); ++x) {
      if (current.contains(x) || !is_power_of(group->element_order(x), p)) continue;
      ElementId extra[] = {x};
      Subgroup candidate = extend(current, extra);
      if (is_power_of(candidate.size(), p)) {
        current = std::move(candidate);
        grown = true;
        break;
      }
    }
  }
  if (is_nilpotent(group) && !is_normal(current)) {
    throw Error("sylow_subgroup: nilpotent group with non-normal Sylow subgroup");
  }
  return current;
}

}  // namespace profin
