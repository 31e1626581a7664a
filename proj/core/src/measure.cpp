#include "profin/measure.hpp"

#include <algorithm>
#include <tuple>

#include "profin/errors.hpp"
#include "profin/gfp.hpp"
#include "profin/lattice.hpp"
#include "profin/structure.hpp"

namespace profin {

CommutingStats commuting_pairs(const GroupPtr& group, const Caps& caps) {
  const auto n = group->order();
  if (n > caps.order) throw CapExceeded("commuting count order", caps.order, n);
  std::uint64_t total = 0;
  for (ElementId x = 0; x < n; ++x) {
    auto row = group->row(x);
    for (ElementId y = 0; y < n; ++y) {
      if (row[y] == group->row(y)[x]) ++total;
    }
  }
  CommutingStats stats;
  stats.name = group->name();
  stats.order = n;
  stats.class_count = conjugacy_classes(group).size();
  if (total != static_cast<std::uint64_t>(n) * stats.class_count) {
    throw std::logic_error("commuting count disagrees with class count for " + group->name());
  }
  stats.pairs = BigInt(total);
  stats.fraction = make_rational(stats.pairs, BigInt(n) * n);
  return stats;
}

NeumannWitness neumann_search(const GroupPtr& group, const Caps& caps) {
  const auto normals = enumerate_normal_subgroups(group);
  const BigInt order(group->order());
  std::vector<Subgroup> derived;
  derived.reserve(normals.size());
  for (const auto& n : normals) derived.push_back(commutator_subgroup(n, n));

  NeumannWitness best;
  best.group = group->name();
  bool found = false;
  auto key = [&](const Subgroup& k, const Subgroup& n, const BigInt& value) {
    return std::make_tuple(value, k.size(), group->order() - n.size(), std::cref(k.elements()),
                           std::cref(n.elements()));
  };
  for (std::size_t j = 0; j < normals.size(); ++j) {
    const auto& n = normals[j];
    const BigInt index(group->order() / n.size());
    for (const auto& k : normals) {
      if (!k.is_subset_of(n) || !derived[j].is_subset_of(k)) continue;
      ++best.admissible_pairs;
      BigInt value = BigInt(k.size()) * index * index;
      if (!found || key(k, n, value) < key(best.k, best.n, best.value)) {
        found = true;
        best.k = k;
        best.n = n;
        best.value = value;
        best.n_commutator = derived[j].size();
      }
    }
  }
  best.k_size = best.k.size();
  best.n_index = group->order() / best.n.size();
  best.pairs = commuting_pairs(group, caps).pairs;
  best.bound_holds = best.pairs * best.value >= order * order;
  return best;
}

std::size_t core_quotient_rank(const GroupPtr& group, const Caps& caps) {
  std::size_t worst = 0;
  for (const auto& h : enumerate_subgroups(group, SIZE_MAX, caps)) {
    auto c = core(h);
    if (c.size() == h.size()) continue;
    auto local = as_group(h);
    std::vector<ElementId> index(group->order(), 0);
    for (ElementId i = 0; i < local.embedding.size(); ++i) index[local.embedding[i]] = i;
    std::vector<ElementId> core_local;
    for (auto x : c.elements()) core_local.push_back(index[x]);
    std::sort(core_local.begin(), core_local.end());
    auto q = quotient(Subgroup(local.group, std::move(core_local)));
    worst = std::max(worst, prufer_rank(q.group, caps));
  }
  return worst;
}

namespace {

// Greedy basis of an elementary abelian section: elements of `pool` in id
// order, each kept when it is outside the span of `start` and earlier picks.
std::vector<ElementId> greedy_basis(Subgroup start, const std::vector<ElementId>& pool) {
  std::vector<ElementId> basis;
  for (auto x : pool) {
    if (start.contains(x)) continue;
    basis.push_back(x);
    ElementId gen[] = {x};
    start = extend(start, gen);
  }
  return basis;
}

}  // namespace

ExteriorReport rho_wedge(const GroupPtr& group) {
  ExteriorReport report;
  report.group = group->name();
  const auto n = group->order();
  if (n == 1) {
    report.w_elements = {0};
    return report;
  }
  const auto p = static_cast<std::uint32_t>(prime_power_base(n));
  if (p == 0) throw PreconditionFailed(group->name() + " is not a p-group");
  report.p = p;
  const auto whole = Subgroup::whole(group);
  const auto w = commutator_subgroup(whole, whole);
  if (!w.is_subset_of(center(group))) throw PreconditionFailed(group->name() + " has nilpotency class above 2");
  for (auto x : w.elements()) {
    if (group->power(x, p) != 0) throw PreconditionFailed(group->name() + ": [L, L] is not elementary abelian");
  }
  for (ElementId x = 0; x < n; ++x) {
    if (!w.contains(group->power(x, p))) {
      throw PreconditionFailed(group->name() + ": L/[L, L] is not elementary abelian");
    }
  }
  report.w_elements = w.elements();

  const auto w_basis = greedy_basis(Subgroup::trivial(group), w.elements());
  report.dim_w = w_basis.size();
  std::vector<gfp::Vec> coords(n);
  {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < w_basis.size(); ++i) combos *= p;
    for (std::size_t c = 0; c < combos; ++c) {
      gfp::Vec v(w_basis.size());
      ElementId x = 0;
      std::size_t rest = c;
      for (std::size_t i = 0; i < w_basis.size(); ++i) {
        v[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
        x = group->mul(x, group->power(w_basis[i], v[i]));
      }
      coords[x] = std::move(v);
    }
  }

  std::vector<ElementId> all(n);
  for (ElementId x = 0; x < n; ++x) all[x] = x;
  report.basis_lifts = greedy_basis(w, all);
  const auto d = report.basis_lifts.size();
  report.dim_u = d;
  report.dim_wedge = d * (d - 1) / 2;

  gfp::Matrix f;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      f.push_back(coords[group->commutator(report.basis_lifts[i], report.basis_lifts[j])]);
    }
  }
  report.rank_f = report.dim_w == 0 ? 0 : gfp::rank(f, p);
  report.dim_kernel = report.dim_wedge - report.rank_f;
  if (d > 0) report.k = report.dim_kernel / d;
  return report;
}

bool wedge_applicable(const GroupPtr& group) {
  try {
    rho_wedge(group);
    return true;
  } catch (const PreconditionFailed&) {
    return false;
  }
}

std::string to_string(RhoKind kind) {
  switch (kind) {
    case RhoKind::com: return "com";
    case RhoKind::r: return "r";
    case RhoKind::wedge: return "wedge";
  }
  return "?";
}

RhoKind parse_rho_kind(const std::string& text) {
  if (text == "com") return RhoKind::com;
  if (text == "r") return RhoKind::r;
  if (text == "wedge") return RhoKind::wedge;
  throw InvalidInput("unknown rho kind '" + text + "' (expected com, r or wedge)");
}

namespace {

std::map<std::size_t, std::vector<GroupPtr>> by_order(const std::vector<GroupPtr>& corpus) {
  std::map<std::size_t, std::vector<GroupPtr>> out;
  for (const auto& g : corpus) out[g->order()].push_back(g);
  for (auto& [order, groups] : out) {
    std::sort(groups.begin(), groups.end(), [](const GroupPtr& a, const GroupPtr& b) { return a->name() < b->name(); });
  }
  return out;
}

}  // namespace

RhoTable rho_table(const std::vector<GroupPtr>& corpus, RhoKind kind, std::size_t max_order,
                   const std::string& mode, const Caps& caps) {
  auto groups = by_order(corpus);
  if (max_order == 0 && !groups.empty()) max_order = groups.rbegin()->first;
  RhoTable table{kind, mode, {}};
  for (std::size_t i = 1; i <= max_order; ++i) {
    RhoEntry entry;
    entry.order = i;
    auto it = groups.find(i);
    if (it != groups.end()) {
      for (const auto& g : it->second) {
        std::optional<BigInt> v;
        switch (kind) {
          case RhoKind::com:
            v = commuting_pairs(g, caps).pairs;
            if (!entry.value || *v < *entry.value) entry.value = v;
            break;
          case RhoKind::r:
            v = BigInt(core_quotient_rank(g, caps));
            if (!entry.value || *v > *entry.value) entry.value = v;
            break;
          case RhoKind::wedge:
            if (!wedge_applicable(g)) continue;
            if (auto k = rho_wedge(g).k) {
              v = BigInt(*k);
              if (!entry.value || *v < *entry.value) entry.value = v;
            }
            break;
        }
        entry.groups.push_back(g->name());
      }
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

InequalityReport verify_inequalities(const std::vector<GroupPtr>& corpus,
                                     const std::optional<std::map<std::size_t, BigInt>>& beta,
                                     const Caps& caps) {
  InequalityReport report;
  for (const auto& [order, groups] : by_order(corpus)) {
    BigInt rho_com;
    bool first = true;
    for (const auto& g : groups) {
      auto pairs = commuting_pairs(g, caps).pairs;
      if (first || pairs < rho_com) rho_com = pairs;
      first = false;
    }
    const BigInt i(order);

    if (beta) {
      InequalityOneRow row;
      row.order = order;
      for (const auto& g : groups) row.rho_r = std::max(row.rho_r, core_quotient_rank(g, caps));
      auto b = beta->find(row.rho_r);
      if (b == beta->end()) throw InvalidInput("beta table has no entry for r = " + std::to_string(row.rho_r));
      if (b->second <= 0) throw InvalidInput("beta values must be positive");
      row.beta = b->second;
      row.lhs = make_rational(i * i, row.beta * row.beta);
      row.rho_com = rho_com;
      row.holds = row.lhs <= Rational(rho_com);
      report.all_hold = report.all_hold && row.holds;
      report.one.push_back(row);
    }

    if (order == 1) {
      report.two_skipped.emplace_back(order, "trivial group: dim U = 0");
      continue;
    }
    std::optional<std::string> skip;
    std::vector<ExteriorReport> ext;
    for (const auto& g : groups) {
      try {
        ext.push_back(rho_wedge(g));
      } catch (const PreconditionFailed& e) {
        skip = e.what();
        break;
      }
    }
    if (skip) {
      report.two_skipped.emplace_back(order, *skip);
      continue;
    }
    InequalityTwoRow row;
    row.order = order;
    row.p = ext.front().p;
    for (std::size_t m = order; m > 1; m /= row.p) ++row.log_p_order;
    row.rho_wedge = *ext.front().k;
    bool first_w = true;
    for (const auto& e : ext) {
      row.rho_wedge = std::min(row.rho_wedge, *e.k);
      Rational bound = make_rational(i * i, BigInt(e.w_elements.size()));
      if (first_w || bound < row.intermediate) row.intermediate = bound;
      first_w = false;
    }
    const auto nn = static_cast<std::int64_t>(row.log_p_order);
    const auto kk = static_cast<std::int64_t>(row.rho_wedge);
    // (i^((2k+1-n)/2) * i^2)^2 = p^(n(2k+1-n) + 4n)
    row.exponent2 = nn * (2 * kk + 5 - nn);
    const BigInt pp(row.p);
    BigInt magnitude = boost::multiprecision::pow(pp, static_cast<unsigned>(std::abs(row.exponent2)));
    row.lhs_squared = row.exponent2 >= 0 ? Rational(magnitude) : make_rational(BigInt(1), magnitude);
    row.rho_com = rho_com;
    row.lhs_below_intermediate = row.lhs_squared <= row.intermediate * row.intermediate;
    row.intermediate_holds = row.intermediate <= Rational(rho_com);
    row.holds = row.lhs_squared <= Rational(rho_com * rho_com) && row.lhs_below_intermediate && row.intermediate_holds;
    report.all_hold = report.all_hold && row.holds;
    report.two.push_back(row);
  }
  return report;
}

EpsilonReport epsilon_evidence(const std::vector<GroupPtr>& family, const Caps& caps) {
  if (family.empty()) throw InvalidInput("epsilon_evidence needs a non-empty family");
  EpsilonReport report;
  for (const auto& g : family) {
    auto w = neumann_search(g, caps);
    EpsilonMember m{g->name(), g->order(), make_rational(w.pairs, BigInt(g->order()) * g->order()), w.n_index,
                    w.n_commutator};
    if (report.members.empty() || m.fraction < report.epsilon) report.epsilon = m.fraction;
    report.members.push_back(std::move(m));
  }
  report.fraction_decay = report.members.size() >= 2;
  report.witness_growth = report.members.size() >= 2;
  for (std::size_t j = 1; j < report.members.size(); ++j) {
    const auto& a = report.members[j - 1];
    const auto& b = report.members[j];
    if (!(b.fraction < a.fraction)) report.fraction_decay = false;
    if (!(b.n1 * b.n1 * b.n2 > a.n1 * a.n1 * a.n2)) report.witness_growth = false;
  }
  return report;
}

}  // namespace profin
