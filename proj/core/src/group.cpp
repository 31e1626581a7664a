#include "profin/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "profin/errors.hpp"

namespace profin {

namespace {

void check_order_cap(std::size_t order, const Caps& caps) {
  auto limit = std::min(caps.order, Caps::kMaxOrder);
  if (order > limit) throw CapExceeded("group order", limit, order);
}

// Closed element set grown one generator at a time (Dimino's algorithm).
// `elements` is always a subgroup generated by `gens`.
struct Closure {
  const FiniteGroup* group;
  std::vector<ElementId> elements;
  std::vector<bool> mask;
  std::vector<ElementId> gens;

  explicit Closure(const FiniteGroup& g) : group(&g), elements{0}, mask(g.order(), false) {
    mask[0] = true;
  }

  Closure(const FiniteGroup& g, const std::vector<ElementId>& subgroup_elements,
          std::vector<ElementId> subgroup_gens)
      : group(&g), elements(subgroup_elements), mask(g.order(), false), gens(std::move(subgroup_gens)) {
    for (auto x : elements) mask[x] = true;
  }

  bool contains(ElementId x) const { return mask[x]; }

  void add(ElementId x) {
    if (mask[x]) return;
    gens.push_back(x);
    const std::vector<ElementId> base = elements;
    std::vector<ElementId> reps{0};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (auto s : gens) {
        ElementId g = group->mul(reps[r], s);
        if (mask[g]) continue;
        reps.push_back(g);
        for (auto h : base) {
          ElementId y = group->mul(h, g);
          mask[y] = true;
          elements.push_back(y);
        }
      }
    }
  }

  Subgroup finish(const GroupPtr& parent) && {
    std::sort(elements.begin(), elements.end());
    return Subgroup(parent, std::move(elements));
  }
};

std::vector<ElementId> greedy_generators(const FiniteGroup& group,
                                         const std::vector<ElementId>& candidates) {
  Closure closure(group);
  for (auto x : candidates) closure.add(x);
  return closure.gens;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

GroupPtr build_from_raw_table(std::string name, std::size_t order, std::vector<std::uint16_t> table,
                              std::optional<PermPresentation> perm) {
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->name_ = std::move(name);
  group->order_ = order;
  group->table_ = std::move(table);
  group->perm_ = std::move(perm);
  group->finish_inverses();
  return group;
}

void FiniteGroup::finish_inverses() {
  inverse_.assign(order_, 0);
  for (ElementId a = 0; a < order_; ++a) {
    auto r = row(a);
    auto it = std::find(r.begin(), r.end(), std::uint16_t{0});
    inverse_[a] = static_cast<ElementId>(it - r.begin());
  }
}

GroupPtr FiniteGroup::from_table(std::string name, const std::vector<std::vector<ElementId>>& table,
                                 const Caps& caps) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput(name + ": empty table");
  check_order_cap(n, caps);
  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw InvalidInput(name + ": row " + std::to_string(a) + " has " +
                         std::to_string(table[a].size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      auto v = table[a][b];
      if (v >= n) throw InvalidInput(name + ": entry out of range at row " + std::to_string(a));
      if (seen[v]) throw InvalidInput(name + ": row " + std::to_string(a) + " repeats an element");
      seen[v] = true;
      flat[a * n + b] = static_cast<std::uint16_t>(v);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = flat[a * n + b];
      if (seen[v]) throw InvalidInput(name + ": column " + std::to_string(b) + " repeats an element");
      seen[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a || flat[a * n] != a) {
      throw InvalidInput(name + ": element 0 is not the identity");
    }
  }

  auto group = build_from_raw_table(std::move(name), n, std::move(flat));

  // Light's test: the elements a with (xa)y = x(ay) for all x, y form a
  // closed set, so checking a generating set decides associativity.
  std::vector<ElementId> all(n);
  std::iota(all.begin(), all.end(), 0u);
  std::vector<bool> reached(n, false);
  std::vector<ElementId> gens;
  std::vector<ElementId> frontier{0};
  reached[0] = true;
  for (ElementId candidate = 0; candidate < n; ++candidate) {
    if (reached[candidate]) continue;
    gens.push_back(candidate);
    std::vector<ElementId> queue;
    for (ElementId x = 0; x < n; ++x) {
      if (reached[x]) queue.push_back(x);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        auto y = group->mul(queue[i], s);
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  for (auto a : gens) {
    for (ElementId x = 0; x < n; ++x) {
      auto xa = group->mul(x, a);
      for (ElementId y = 0; y < n; ++y) {
        if (group->mul(xa, y) != group->mul(x, group->mul(a, y))) {
          throw InvalidInput(group->name() + ": table is not associative (" + std::to_string(x) +
                             "*" + std::to_string(a) + ")*" + std::to_string(y));
        }
      }
    }
  }
  return group;
}

GroupPtr FiniteGroup::from_permutations(std::string name, std::size_t degree,
                                        const std::vector<Permutation>& generators,
                                        const Caps& caps) {
  if (degree > 10000) throw CapExceeded("permutation degree", 10000, degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidInput(name + ": generator of degree " + std::to_string(g.degree()) +
                         ", expected " + std::to_string(degree));
    }
  }
  const auto limit = std::min(caps.order, Caps::kMaxOrder);
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, ElementId, PermutationHash> index{{elements[0], 0}};
  std::vector<ElementId> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::vector<ElementId>> right_mul;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<ElementId> row(generators.size());
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation next = elements[i] * generators[s];
      auto [it, inserted] = index.try_emplace(next, static_cast<ElementId>(elements.size()));
      if (inserted) {
        if (elements.size() >= limit) throw CapExceeded("group order", limit, elements.size() + 1);
        elements.push_back(std::move(next));
        parent.push_back(static_cast<ElementId>(i));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      row[s] = it->second;
    }
    right_mul.push_back(std::move(row));
  }
  const std::size_t n = elements.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto* row = table.data() + a * n;
    row[0] = static_cast<std::uint16_t>(a);
    for (std::size_t b = 1; b < n; ++b) {
      row[b] = static_cast<std::uint16_t>(right_mul[row[parent[b]]][via[b]]);
    }
  }
  PermPresentation perm{degree, generators, std::move(elements)};
  return build_from_raw_table(std::move(name), n, std::move(table), std::move(perm));
}

ElementId FiniteGroup::power(ElementId x, std::int64_t exponent) const {
  if (exponent < 0) {
    x = inv(x);
    exponent = -exponent;
  }
  ElementId result = 0;
  ElementId base = x;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(ElementId x) const {
  std::size_t k = 1;
  for (ElementId y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::vector<ElementId> FiniteGroup::generators() const {
  std::vector<ElementId> all(order_);
  std::iota(all.begin(), all.end(), 0u);
  return greedy_generators(*this, all);
}

GroupPtr FiniteGroup::renamed(std::string name) const {
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->name_ = std::move(name);
  return copy;
}

// ------------------------------------------------------------------ Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), mask_(parent_->order(), false) {
  for (auto x : elements_) mask_[x] = true;
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::checked(GroupPtr parent, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto x : elements) {
    if (x >= parent->order()) throw InvalidInput("subgroup element id out of range");
  }
  if (elements.empty() || elements.front() != 0) {
    throw PreconditionFailed("subgroup must contain the identity");
  }
  Subgroup result(parent, std::move(elements));
  for (auto a : result.elements_) {
    if (!result.contains(parent->inv(a))) throw PreconditionFailed("subgroup not closed under inverses");
    for (auto b : result.elements_) {
      if (!result.contains(parent->mul(a, b))) {
        throw PreconditionFailed("subgroup not closed under multiplication");
      }
    }
  }
  if (parent->order() % result.size() != 0) throw PreconditionFailed("subgroup order violates Lagrange");
  return result;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](ElementId x) { return other.contains(x); });
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

// ------------------------------------------------------------------ GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<ElementId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

GroupHom GroupHom::checked(GroupPtr source, GroupPtr target, std::vector<ElementId> map) {
  if (map.size() != source->order()) throw InvalidInput("homomorphism map has wrong length");
  for (auto y : map) {
    if (y >= target->order()) throw InvalidInput("homomorphism image out of range");
  }
  GroupHom hom(std::move(source), std::move(target), std::move(map));
  if (!hom.is_homomorphism()) throw PreconditionFailed("map is not a homomorphism");
  return hom;
}

bool GroupHom::is_homomorphism() const {
  if (map_[0] != 0) return false;
  const auto n = source_->order();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (map_[source_->mul(x, y)] != target_->mul(map_[x], map_[y])) return false;
    }
  }
  return true;
}

bool GroupHom::is_surjective() const { return image().size() == target_->order(); }

bool GroupHom::is_injective() const { return kernel().size() == 1; }

Subgroup GroupHom::kernel() const {
  std::vector<ElementId> ker;
  for (ElementId x = 0; x < source_->order(); ++x) {
    if (map_[x] == 0) ker.push_back(x);
  }
  return Subgroup(source_, std::move(ker));
}

Subgroup GroupHom::image() const {
  std::vector<ElementId> img(map_.begin(), map_.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup(target_, std::move(img));
}

Subgroup GroupHom::image(const Subgroup& sub) const {
  std::vector<ElementId> img;
  img.reserve(sub.size());
  for (auto x : sub.elements()) img.push_back(map_[x]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup(target_, std::move(img));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (next.source_ != target_) throw InvalidInput("cannot compose homomorphisms: groups differ");
  std::vector<ElementId> composed(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) composed[x] = next.map_[map_[x]];
  return GroupHom(source_, next.target_, std::move(composed));
}

// ------------------------------------------------------- subgroup operations

Subgroup generate(const GroupPtr& group, std::span<const ElementId> generators) {
  Closure closure(*group);
  for (auto g : generators) closure.add(g);
  return std::move(closure).finish(group);
}

Subgroup extend(const Subgroup& base, std::span<const ElementId> extra) {
  const auto& group = *base.parent();
  Closure closure(group, base.elements(), greedy_generators(group, base.elements()));
  for (auto g : extra) closure.add(g);
  return std::move(closure).finish(base.parent());
}

std::vector<ElementId> subgroup_generators(const Subgroup& sub) {
  return greedy_generators(*sub.parent(), sub.elements());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> out;
  for (auto x : a.elements()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup(a.parent(), std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const auto& group = *a.parent();
  Closure closure(group);
  for (auto x : a.elements()) {
    for (auto y : b.elements()) {
      auto c = group.commutator(x, y);
      if (!closure.contains(c)) closure.add(c);
    }
  }
  return std::move(closure).finish(a.parent());
}

bool is_normal(const Subgroup& h) {
  const auto& group = *h.parent();
  for (auto g : group.generators()) {
    for (auto x : h.elements()) {
      if (!h.contains(group.conjugate(x, g))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ direct products

std::vector<ElementId> decode_tuple(ElementId id, std::span<const std::size_t> radices) {
  std::vector<ElementId> coords(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    coords[i] = static_cast<ElementId>(id % radices[i]);
    id = static_cast<ElementId>(id / radices[i]);
  }
  return coords;
}

ElementId encode_tuple(std::span<const ElementId> coords, std::span<const std::size_t> radices) {
  ElementId id = 0;
  for (std::size_t i = radices.size(); i-- > 0;) {
    id = static_cast<ElementId>(id * radices[i] + coords[i]);
  }
  return id;
}

GroupPtr direct_product(std::string name, const std::vector<GroupPtr>& factors, const Caps& caps) {
  std::size_t order = 1;
  std::vector<std::size_t> radices;
  for (const auto& f : factors) {
    order *= f->order();
    radices.push_back(f->order());
    check_order_cap(order, caps);
  }
  std::vector<std::vector<ElementId>> coords(order);
  for (ElementId id = 0; id < order; ++id) coords[id] = decode_tuple(id, radices);
  std::vector<std::uint16_t> table(order * order);
  std::vector<ElementId> prod(factors.size());
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        prod[k] = factors[k]->mul(coords[a][k], coords[b][k]);
      }
      table[a * order + b] = static_cast<std::uint16_t>(encode_tuple(prod, radices));
    }
  }
  return build_from_raw_table(std::move(name), order, std::move(table));
}

GroupPtr direct_power(const GroupPtr& base, std::size_t exponent, const Caps& caps) {
  std::vector<GroupPtr> factors(exponent, base);
  return direct_product(base->name() + "^" + std::to_string(exponent), factors, caps);
}

}  // namespace profin
