// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
// Exact arithmetic throughout, so every numeric tolerance is zero.

#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli/app.hpp"
#include "cli/corpus.hpp"
#include "profin/algebra.hpp"
#include "profin/boolean_power.hpp"
#include "profin/errors.hpp"
#include "profin/lattice.hpp"
#include "profin/measure.hpp"
#include "profin/module_ring.hpp"
#include "profin/structure.hpp"
#include "support/oracles.hpp"

using namespace profin;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const cli::Corpus& corpus() {
  static const cli::Corpus c = cli::bundled_corpus();
  return c;
}

/// Normal subgroups as unions of conjugacy classes that are closed under
/// multiplication. Independent of the library's lattice code.
std::set<oracle::ElemSet> class_union_normals(const GroupPtr& g) {
  std::vector<oracle::ElemSet> rest;
  for (const auto& c : oracle::classes(g)) {
    if (!c.contains(0)) rest.push_back(c);
  }
  std::set<oracle::ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    oracle::ElemSet s{0};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1) s.insert(rest[i].begin(), rest[i].end());
    }
    if (g->order() % s.size() != 0) continue;
    bool closed = true;
    for (auto a : s) {
      for (auto b : s) {
        if (!s.contains(g->mul(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

oracle::ElemSet as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

/// Distance from the identity to `target` using conjugates of x and x^-1.
std::optional<std::size_t> conjugate_distance(const GroupPtr& g, ElementId x, ElementId target) {
  oracle::ElemSet conj;
  for (ElementId h = 0; h < g->order(); ++h) {
    conj.insert(g->conjugate(x, h));
    conj.insert(g->conjugate(g->inv(x), h));
  }
  std::map<ElementId, std::size_t> dist{{0, 0}};
  std::vector<ElementId> layer{0};
  while (!layer.empty()) {
    std::vector<ElementId> next;
    for (auto a : layer) {
      for (auto c : conj) {
        auto y = g->mul(a, c);
        if (dist.emplace(y, dist[a] + 1).second) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  auto it = dist.find(target);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

void burnside(Check& c) {
  for (const auto& g : corpus().groups) {
    const auto n = g->order();
    std::uint64_t pairs = 0;
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) pairs += g->mul(x, y) == g->mul(y, x);
    }
    const auto classes = conjugacy_classes(g).size();
    c.expect(pairs == n * classes, g->name() + ": pairs != |G| x classes");
    c.expect(oracle::classes(g).size() == classes, g->name() + ": class count disagrees with oracle");
    const auto stats = commuting_pairs(g);
    c.expect(stats.pairs == pairs && stats.class_count == classes, g->name() + ": library count differs");
  }
}

void neumann(Check& c) {
  for (const auto& g : corpus().groups) {
    const auto w = neumann_search(g);
    const BigInt order = g->order();
    c.expect(w.pairs * w.value >= order * order, g->name() + ": bound fails");
    c.expect(w.bound_holds, g->name() + ": witness flags bound as failing");
    c.expect(BigInt(w.k.size()) * w.n_index * w.n_index == w.value, g->name() + ": value is not |K||L:N|^2");

    const auto normals = class_union_normals(g);
    c.expect(normals.contains(as_set(w.k)) && normals.contains(as_set(w.n)), g->name() + ": witness not normal");
    std::uint64_t best = UINT64_MAX;
    for (const auto& n : normals) {
      const auto nn = oracle::commutator(g, n, n);
      const std::uint64_t index = g->order() / n.size();
      for (const auto& k : normals) {
        if (k.size() > n.size() || !std::includes(n.begin(), n.end(), k.begin(), k.end())) continue;
        if (!std::includes(k.begin(), k.end(), nn.begin(), nn.end())) continue;
        best = std::min<std::uint64_t>(best, k.size() * index * index);
      }
    }
    c.expect(w.value == best, g->name() + ": witness is not minimal");
  }
}

void correspondence(Check& c) {
  const auto a5 = corpus().find("A5");
  for (std::size_t atoms : {1u, 2u}) {
    const auto ring = FiniteBooleanRing::with_atoms(atoms);
    const auto power = materialize_bp_group(a5, ring);
    const auto report = verify_ideal_correspondence(a5, ring);
    std::set<oracle::ElemSet> from_ideals;
    for (const auto& ideal : enumerate_ideals(ring)) from_ideals.insert(as_set(ideal_normal_subgroup(power, ideal)));
    std::set<oracle::ElemSet> normals;
    for (const auto& n : report.normal_subgroups) {
      c.expect(oracle::is_normal(power.group(), as_set(n)), "A5^B: reported subgroup not normal");
      normals.insert(as_set(n));
    }
    c.expect(report.holds, "A5^B: correspondence reported as failing");
    c.expect(normals == from_ideals, "A5^B: normal subgroups differ from ideal subgroups");
    c.expect(from_ideals.size() == (std::size_t{1} << atoms), "A5^B: wrong number of ideals");
  }

  const auto z4 = corpus().find("Z4");
  const auto ring = FiniteBooleanRing::with_atoms(2);
  const auto power = materialize_bp_group(z4, ring);
  const auto report = verify_ideal_correspondence(z4, ring);
  c.expect(!report.holds && !report.non_ideal.empty(), "Z4^B: correspondence should fail");
  std::set<oracle::ElemSet> from_ideals;
  for (const auto& ideal : enumerate_ideals(ring)) from_ideals.insert(as_set(ideal_normal_subgroup(power, ideal)));
  for (const auto& n : report.non_ideal) {
    c.expect(oracle::is_normal(power.group(), as_set(n)), "Z4^B: witness not normal");
    c.expect(!from_ideals.contains(as_set(n)), "Z4^B: witness has ideal form");
  }
}

void quotient_iso(Check& c) {
  const std::vector<std::pair<std::string, std::size_t>> cases{{"Z2", 3}, {"S3", 3}, {"A5", 2}};
  for (const auto& [name, atoms] : cases) {
    const auto base = corpus().find(name);
    const auto ring = FiniteBooleanRing::with_atoms(atoms);
    for (const auto& ideal : enumerate_ideals(ring)) {
      const auto iso = bp_quotient_iso(base, ring, ideal);
      const std::size_t m = atoms - std::popcount(static_cast<std::uint64_t>(ideal.support()));
      std::size_t expected = 1;
      for (std::size_t i = 0; i < m; ++i) expected *= base->order();
      const auto tag = name + " ideal " + std::to_string(ideal.support());
      c.expect(iso.m == m, tag + ": wrong atom count");
      c.expect(iso.direct_power->order() == expected && iso.quotient.group->order() == expected, tag + ": order");
      c.expect(iso.iso.source() == iso.quotient.group && iso.iso.target() == iso.direct_power, tag + ": ends");
      c.expect(iso.iso.is_homomorphism() && iso.iso.is_injective() && iso.iso.is_surjective(),
               tag + ": not an isomorphism");
    }
  }
}

void cp_monotone(Check& c) {
  const auto a5 = corpus().find("A5");
  std::uint64_t pairs = 0;
  for (ElementId x = 0; x < 60; ++x) {
    for (ElementId y = 0; y < 60; ++y) pairs += a5->mul(x, y) == a5->mul(y, x);
  }
  const Rational frac = make_rational(pairs, 3600);
  c.expect(frac == make_rational(1, 12), "A5 fraction is not 1/12");
  bool saw_a5 = false;
  for (const auto& spec : corpus().towers) {
    const auto sys = cli::build_tower(spec, corpus());
    const auto cp = cp_sequence(sys);
    for (std::size_t n = 1; n < cp.size(); ++n) c.expect(cp[n] <= cp[n - 1], spec.name + ": cp increases");
    if (spec.power == "A5") {
      saw_a5 = true;
      Rational expected = 1;
      for (const auto& value : cp) {
        expected *= frac;
        c.expect(value == expected, spec.name + ": cp is not c^m");
      }
    }
  }
  c.expect(saw_a5, "no A5 power tower in the corpus");
}

void wedge_pipeline(Check& c) {
  const std::vector<std::pair<std::uint32_t, std::vector<std::string>>> families{{2, {"Q8", "D8"}},
                                                                               {3, {"Heis27", "Ext27c"}}};
  for (const auto& [p, names] : families) {
    std::vector<GroupPtr> groups;
    std::uint64_t rho_com = UINT64_MAX;
    for (const auto& name : names) {
      const auto g = corpus().find(name);
      groups.push_back(g);
      rho_com = std::min(rho_com, oracle::commuting_pairs(g));
      const auto e = rho_wedge(g);
      // U = L/Z(L) of dimension 2, the wedge square and W = Z(L) of dimension 1,
      // f_L onto W: kernel 0 and k = 0.
      c.expect(e.p == p && e.dim_u == 2 && e.dim_wedge == 1 && e.dim_w == 1, name + ": dimensions");
      c.expect(e.rank_f == 1 && e.dim_kernel == 0 && e.k == std::optional<std::size_t>(0), name + ": kernel or k");
    }
    const auto report = verify_inequalities(groups, std::nullopt);
    c.expect(report.two.size() == 1 && report.two_skipped.empty(), "order p^3 not checked");
    if (report.two.size() != 1) continue;
    const auto& row = report.two.front();
    const std::int64_t i = std::int64_t{p} * p * p;
    // i^((2k + 1 - 3)/2) * i^2 with k = 0, squared: i^2.
    const Rational lhs_sq = make_rational(i * i, 1);
    const Rational intermediate = make_rational(i * i, p);
    c.expect(row.rho_wedge == 0 && row.lhs_squared == lhs_sq, "lhs mismatch at p = " + std::to_string(p));
    c.expect(row.intermediate == intermediate && row.rho_com == rho_com, "intermediate or rho_com mismatch");
    c.expect(lhs_sq <= intermediate * intermediate && intermediate <= Rational(rho_com), "chain fails");
    c.expect(row.holds && row.intermediate_holds && row.lhs_below_intermediate && report.all_hold, "flags");
  }
}

void commutator_levels(Check& c) {
  for (const auto& spec : corpus().towers) {
    const auto sys = cli::build_tower(spec, corpus());
    const auto top = Subgroup::whole(sys.top());
    const auto report = commutator_level_check(sys, top, top);
    c.expect(report.passed && !report.first_failing_level, spec.name + ": check failed");
    oracle::ElemSet everything;
    for (ElementId x = 0; x < sys.top()->order(); ++x) everything.insert(x);
    const auto comm_top = oracle::commutator(sys.top(), everything, everything);
    for (std::size_t n = 0; n < sys.depth(); ++n) {
      const auto& proj = sys.composite(sys.depth() - 1, n);
      oracle::ElemSet image;
      for (auto x : comm_top) image.insert(proj(x));
      oracle::ElemSet level;
      for (ElementId x = 0; x < sys.levels()[n]->order(); ++x) level.insert(x);
      const auto comm_level = oracle::commutator(sys.levels()[n], level, level);
      c.expect(image == comm_level, spec.name + ": level " + std::to_string(n) + " mismatch");
      c.expect(report.commutator_orders.size() == sys.depth() && report.commutator_orders[n] == comm_level.size(),
               spec.name + ": reported order mismatch");
    }
  }
}

void spread(Check& c) {
  for (const auto& g : corpus().groups) {
    if (g->order() > 60) continue;
    const auto result = conjugate_spread(g);
    c.expect(result.witnesses.size() == g->order(), g->name() + ": witness count");
    std::size_t worst = 0;
    for (ElementId x = 0; x < result.witnesses.size(); ++x) {
      const auto& w = result.witnesses[x];
      const auto dist = conjugate_distance(g, w.element, w.worst);
      c.expect(w.element == x && dist == std::optional<std::size_t>(w.depth), g->name() + ": witness depth wrong");
      c.expect(w.depth == oracle::spread_of(g, x), g->name() + ": witness is not the worst element");
      worst = std::max(worst, w.depth);
    }
    c.expect(result.spread == worst, g->name() + ": spread is not the max witness depth");
  }
  const auto s3 = corpus().find("S3");
  c.expect(conjugate_spread(s3).spread == oracle::spread(s3), "S3 spread differs from oracle");
}

void ring_pipeline(Check& c) {
  auto find_action = [](const std::string& name) {
    for (const auto& a : corpus().actions) {
      if (a.name == name) return a;
    }
    throw InvalidInput("missing action " + name);
  };
  const auto swap = find_action("swap-GF3");
  auto action = std::make_shared<const GModuleAction>(cli::build_action(swap, corpus()));
  const auto rc = ring_construct(action, swap.v);
  c.expect(rc.well_defined(), "swap: ill-defined");
  if (rc.well_defined()) {
    const auto& ring = *rc.ring;
    c.expect(ring.is_commutative() && ring.is_associative(), "swap: not commutative associative");
    const auto d = mr_decompose(ring.to_algebra("swap"));
    c.expect(d.factors.size() == 2, "swap: expected two factors");
    for (const auto& f : d.factors) c.expect(f.field.size() == 3 && f.field.is_field(), "swap: factor is not GF(3)");
  }

  const auto regular = find_action("regular-Z2-GF2");
  auto reg_action = std::make_shared<const GModuleAction>(cli::build_action(regular, corpus()));
  const auto reg = ring_construct(reg_action, regular.v);
  c.expect(reg.well_defined(), "regular: ill-defined");
  if (!reg.well_defined()) return;
  const auto check = nilpotent_free_check(*reg.ring);
  c.expect(!check.nilpotent_free && check.witness.has_value(), "regular: no nilpotent witness");
  if (check.witness) {
    const auto x = *check.witness;
    c.expect(x != 0 && reg.ring->mul(x, x) == 0, "regular: witness does not square to zero");
  }
  try {
    mr_decompose(reg.ring->to_algebra("regular"));
    c.expect(false, "regular: decomposition did not flag the nilpotent");
  } catch (const NilpotentElementFound& e) {
    c.expect(e.witness() != 0, "regular: zero witness");
  }
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "profin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

void determinism(Check& c) {
  const std::vector<std::vector<std::string>> suite{
      {"analyze-group"},          {"neumann"},
      {"rho", "--kind", "com"},   {"rho", "--kind", "r"},
      {"rho", "--kind", "wedge"}, {"boolean-power"},
      {"inverse-system"},         {"ring-from-module"},
      {"verify-inequalities"},    {"--format", "csv", "analyze-group"}};
  auto full_run = [&](const std::string& jobs) {
    std::string all;
    for (auto args : suite) {
      args.insert(args.begin(), {"--jobs", jobs});
      all += run_cli(args);
    }
    return all;
  };
  const auto first = full_run("1");
  const auto second = full_run("1");
  const auto parallel = full_run("4");
  c.expect(first == second, "consecutive runs differ");
  c.expect(first == parallel, "worker count changes the output");
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "burnside-identity", 10, burnside},
      {2, "neumann-bound-and-minimality", 60, neumann},
      {3, "ideal-correspondence", 300, correspondence},
      {4, "boolean-power-quotients", 120, quotient_iso},
      {5, "cp-monotonicity", 180, cp_monotone},
      {6, "wedge-and-inequality-two", 10, wedge_pipeline},
      {7, "commutator-levels", 30, commutator_levels},
      {8, "conjugate-spread", 60, spread},
      {9, "module-ring-pipeline", 10, ring_pipeline},
      {10, "determinism", 600, determinism},
  };
  int failures = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs <= crit.budget_seconds, "over time budget");
    failures += !check.ok;
    std::cout << (check.ok ? "PASS" : "FAIL") << " criterion " << crit.id << " " << crit.name << " ("
              << static_cast<long>(secs * 1000) << " ms, budget " << crit.budget_seconds << " s)";
    if (!check.ok) std::cout << ": " << check.why.str();
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
