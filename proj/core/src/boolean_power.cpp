#include "profin/boolean_power.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "profin/lattice.hpp"

namespace profin {

BooleanPowerGroup::BooleanPowerGroup(GroupPtr base, FiniteBooleanRing ring)
    : base_(std::move(base)), ring_(ring) {}

std::vector<ElementId> BooleanPowerGroup::evaluate(const BPElement& x) const {
  std::vector<ElementId> values(ring_.atom_count(), 0);
  for (const auto& t : x.terms) {
    for (std::size_t a = 0; a < values.size(); ++a) {
      if (t.support & ring_.atom(a)) values[a] = t.g;
    }
  }
  return values;
}

BPElement BooleanPowerGroup::from_values(std::span<const ElementId> values) const {
  std::map<ElementId, BoolElem> grouped;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] != 0) grouped[values[a]] |= ring_.atom(a);
  }
  BPElement out;
  for (const auto& [g, support] : grouped) out.terms.push_back({g, support});
  return out;
}

BPElement BooleanPowerGroup::normalize(std::span<const BPTerm> raw) const {
  std::vector<ElementId> values(ring_.atom_count(), 0);
  for (const auto& t : raw) {
    if (t.g >= base_->order() || !ring_.contains(t.support)) {
      throw InvalidInput("Boolean power term outside base group or ring");
    }
    for (std::size_t a = 0; a < values.size(); ++a) {
      if (t.support & ring_.atom(a)) values[a] = base_->mul(values[a], t.g);
    }
  }
  return from_values(values);
}

BPElement BooleanPowerGroup::multiply(const BPElement& x, const BPElement& y) const {
  auto vx = evaluate(x);
  auto vy = evaluate(y);
  for (std::size_t a = 0; a < vx.size(); ++a) vx[a] = base_->mul(vx[a], vy[a]);
  return from_values(vx);
}

BPElement BooleanPowerGroup::inverse(const BPElement& x) const {
  BPElement out;
  for (const auto& t : x.terms) out.terms.push_back({base_->inv(t.g), t.support});
  std::sort(out.terms.begin(), out.terms.end(), [](const BPTerm& a, const BPTerm& b) { return a.g < b.g; });
  return out;
}

BPElement bp_normalize(const BooleanPowerGroup& power, std::span<const BPTerm> raw) {
  return power.normalize(raw);
}

BPElement bp_multiply(const BooleanPowerGroup& power, const BPElement& x, const BPElement& y) {
  for (const auto* e : {&x, &y}) {
    for (const auto& t : e->terms) {
      if (t.g >= power.base()->order() || !power.ring().contains(t.support)) {
        throw InvalidInput("bp_multiply: element does not belong to this Boolean power");
      }
    }
  }
  return power.multiply(x, y);
}

// -------------------------------------------------------------- materialize

MaterializedPower::MaterializedPower(BooleanPowerGroup power, GroupPtr group)
    : power_(std::move(power)), group_(std::move(group)), radices_(power_.ring().atom_count(), power_.base()->order()) {}

ElementId MaterializedPower::id_of(const BPElement& x) const {
  auto values = power_.evaluate(x);
  return encode_tuple(values, radices_);
}

BPElement MaterializedPower::element(ElementId id) const { return power_.from_values(values(id)); }

std::vector<ElementId> MaterializedPower::values(ElementId id) const { return decode_tuple(id, radices_); }

MaterializedPower materialize_bp_group(const GroupPtr& base, const FiniteBooleanRing& ring, const Caps& caps) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < ring.atom_count(); ++i) {
    order *= base->order();
    if (order > caps.order) throw CapExceeded("Boolean power order", caps.order, order);
  }
  auto group = direct_power(base, ring.atom_count(), caps)
                   ->renamed(base->name() + "^B" + std::to_string(ring.atom_count()));
  return MaterializedPower(BooleanPowerGroup(base, ring), std::move(group));
}

Subgroup ideal_normal_subgroup(const MaterializedPower& power, const BooleanIdeal& ideal) {
  const auto& ring = power.power().ring();
  if (!(ideal.ring() == ring)) throw PreconditionFailed("ideal belongs to a different ring");
  std::vector<ElementId> members;
  for (ElementId id = 0; id < power.group()->order(); ++id) {
    auto values = power.values(id);
    bool inside = true;
    for (std::size_t a = 0; a < values.size() && inside; ++a) {
      inside = values[a] == 0 || (ideal.support() & ring.atom(a));
    }
    if (inside) members.push_back(id);
  }
  return Subgroup(power.group(), std::move(members));
}

IdealCorrespondenceReport verify_ideal_correspondence(const GroupPtr& base, const FiniteBooleanRing& ring,
                                                      const Caps& caps) {
  auto power = materialize_bp_group(base, ring, caps);
  IdealCorrespondenceReport report;
  const auto ideals = enumerate_ideals(ring);
  report.ideal_count = ideals.size();
  std::map<std::vector<ElementId>, BooleanIdeal> by_elements;
  for (const auto& s : ideals) by_elements.emplace(ideal_normal_subgroup(power, s).elements(), s);
  report.normal_subgroups = enumerate_normal_subgroups(power.group());
  for (const auto& n : report.normal_subgroups) {
    auto it = by_elements.find(n.elements());
    if (it != by_elements.end()) {
      report.matching_ideal.emplace_back(it->second);
    } else {
      report.matching_ideal.emplace_back(std::nullopt);
      report.non_ideal.push_back(n);
    }
  }
  report.holds = report.non_ideal.empty() && by_elements.size() == ideals.size() &&
                 report.normal_subgroups.size() == ideals.size();
  return report;
}

BPQuotientIso bp_quotient_iso(const GroupPtr& base, const FiniteBooleanRing& ring, const BooleanIdeal& ideal,
                              const Caps& caps) {
  auto power = materialize_bp_group(base, ring, caps);
  auto gs = ideal_normal_subgroup(power, ideal);
  auto q = quotient(gs);
  auto boolean_quotient = quotient_ring(ring, ideal);
  const auto m = boolean_quotient.atom_count();
  auto target = direct_power(base, m, caps);
  std::vector<std::size_t> radices(m, base->order());
  std::vector<ElementId> map(q.group->order());
  for (ElementId c = 0; c < q.group->order(); ++c) {
    auto values = power.values(q.representatives[c]);
    std::vector<ElementId> kept;
    for (auto atom : boolean_quotient.surviving_atoms) kept.push_back(values[atom]);
    map[c] = encode_tuple(kept, radices);
  }
  auto iso = GroupHom::checked(q.group, target, std::move(map));
  if (!iso.is_injective() || !iso.is_surjective()) {
    throw Error("bp_quotient_iso: atom restriction is not bijective");
  }
  return {std::move(q), m, std::move(target), std::move(iso)};
}

// ---------------------------------------------------------- filtered powers

FilteredPower filtered_power(const FilteredPowerSpec& spec, const Caps& caps) {
  const auto& field = spec.field;
  const auto& aug = spec.algebra;
  const auto& ring = aug.ring();
  const auto atoms = ring.atom_count();
  if (spec.tau.size() != aug.labels().size()) throw InvalidInput("filtered power: one subfield per label required");
  for (std::size_t i = 0; i < spec.tau.size(); ++i) {
    if (!is_subfield(field, spec.tau[i])) {
      throw PreconditionFailed("filtered power: tau(" + aug.labels()[i] + ") is not a subfield");
    }
  }
  for (std::size_t i = 0; i < spec.tau.size(); ++i) {
    for (std::size_t j = 0; j < spec.tau.size(); ++j) {
      auto ci = aug.closed_set(i), cj = aug.closed_set(j);
      if ((ci & ~cj) != 0) continue;  // only C_i subset of C_j matters
      std::set<RingElem> tj(spec.tau[j].begin(), spec.tau[j].end());
      for (auto x : spec.tau[i]) {
        if (!tj.count(x)) throw PreconditionFailed("filtered power: tau is not order-preserving");
      }
    }
  }
  std::size_t total = 1;
  for (std::size_t a = 0; a < atoms; ++a) {
    total *= field.size();
    if (total > caps.order) throw CapExceeded("filtered power ambient order", caps.order, total);
  }
  // Allowed values per atom: intersection of tau(C) over closed sets C containing it.
  std::vector<std::vector<bool>> allowed(atoms, std::vector<bool>(field.size(), true));
  for (std::size_t i = 0; i < spec.tau.size(); ++i) {
    std::vector<bool> in_tau(field.size(), false);
    for (auto x : spec.tau[i]) in_tau[x] = true;
    for (std::size_t a = 0; a < atoms; ++a) {
      if (!(aug.closed_set(i) & ring.atom(a))) continue;
      for (RingElem x = 0; x < field.size(); ++x) allowed[a][x] = allowed[a][x] && in_tau[x];
    }
  }
  std::vector<std::size_t> radices(atoms, field.size());
  FilteredPower out{finite_field(2), {}};
  std::map<std::vector<RingElem>, RingElem> index;
  for (std::size_t code = 0; code < total; ++code) {
    auto f = decode_tuple(static_cast<ElementId>(code), radices);
    bool ok = true;
    for (std::size_t a = 0; a < atoms && ok; ++a) ok = allowed[a][f[a]];
    if (!ok) continue;
    index.emplace(f, static_cast<RingElem>(out.functions.size()));
    out.functions.push_back(std::move(f));
  }
  const auto& fns = out.functions;
  auto pointwise = [&](auto op) {
    return [&, op](RingElem x, RingElem y) {
      std::vector<RingElem> r(atoms);
      for (std::size_t a = 0; a < atoms; ++a) r[a] = op(fns[x][a], fns[y][a]);
      return index.at(r);
    };
  };
  out.algebra = FiniteCommutativeAlgebra::build(
      field.name() + "^B" + std::to_string(atoms) + "[filtered]", fns.size(),
      pointwise([&](RingElem a, RingElem b) { return field.add(a, b); }),
      pointwise([&](RingElem a, RingElem b) { return field.mul(a, b); }), caps);
  return out;
}

FilteredPower ring_power(const FiniteCommutativeAlgebra& field, const FiniteBooleanRing& ring, const Caps& caps) {
  auto aug = AugmentedBooleanAlgebra(ring, {}, {});
  return filtered_power({field, aug, {}}, caps);
}

RingIdealReport verify_ring_ideal_correspondence(const FiniteCommutativeAlgebra& field,
                                                 const FiniteBooleanRing& ring, const Caps& caps) {
  auto power = ring_power(field, ring, caps);
  const auto& r = power.algebra;
  const auto n = r.size();
  std::set<std::vector<bool>> ideals;
  std::vector<std::vector<bool>> worklist;
  std::vector<std::vector<bool>> principal;
  for (RingElem x = 0; x < n; ++x) {
    std::vector<bool> ideal(n, false);
    for (RingElem y = 0; y < n; ++y) ideal[r.mul(x, y)] = true;
    if (ideals.insert(ideal).second) {
      worklist.push_back(ideal);
      principal.push_back(ideal);
    }
  }
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (const auto& p : principal) {
      std::vector<bool> sum(n, false);
      for (RingElem a = 0; a < n; ++a) {
        if (!worklist[i][a]) continue;
        for (RingElem b = 0; b < n; ++b) {
          if (p[b]) sum[r.add(a, b)] = true;
        }
      }
      if (ideals.insert(sum).second) worklist.push_back(std::move(sum));
    }
  }
  std::set<std::vector<bool>> from_boolean;
  for (const auto& s : enumerate_ideals(ring)) {
    std::vector<bool> members(n, false);
    for (RingElem x = 0; x < n; ++x) {
      bool inside = true;
      for (std::size_t a = 0; a < ring.atom_count() && inside; ++a) {
        inside = power.functions[x][a] == 0 || (s.support() & ring.atom(a));
      }
      members[x] = inside;
    }
    from_boolean.insert(std::move(members));
  }
  return {ideals.size(), from_boolean.size(), ideals == from_boolean};
}

}  // namespace profin
