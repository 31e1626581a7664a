#include "cli/commands.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <thread>

#include "profin/algebra.hpp"
#include "profin/boolean_power.hpp"
#include "profin/errors.hpp"
#include "profin/lattice.hpp"
#include "profin/measure.hpp"
#include "profin/module_ring.hpp"
#include "profin/structure.hpp"

namespace profin::cli {

namespace {

json guarded(const std::string& name, const std::function<json()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return error_item(name, "cap", e.what());
  } catch (const NilpotentElementFound& e) {
    return error_item(name, "nilpotent", e.what());
  } catch (const PreconditionFailed& e) {
    return error_item(name, "precondition", e.what());
  } catch (const InvalidInput& e) {
    return error_item(name, "invalid-input", e.what());
  } catch (const std::exception& e) {
    return error_item(name, "internal", e.what());
  }
}

/// Runs body(i) for i < count on up to `jobs` threads; results keep index order.
std::vector<json> fan_out(std::size_t count, std::size_t jobs, const std::function<json(std::size_t)>& body) {
  std::vector<json> results(count);
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = body(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = body(i);
    });
  }
  for (auto& t : workers) t.join();
  return results;
}

struct Target {
  std::string name;
  GroupPtr group;
};

std::vector<Target> select_groups(const Job& job, const Corpus& corpus) {
  std::vector<Target> out;
  if (job.targets.empty()) {
    for (const auto& g : corpus.groups) out.push_back({g->name(), g});
  } else {
    for (const auto& name : job.targets) out.push_back({name, corpus.find(name)});
  }
  // Reports list groups by (order, name); unresolved references go last.
  std::stable_sort(out.begin(), out.end(), [](const Target& a, const Target& b) {
    if (!a.group || !b.group) return a.group && !b.group;
    return std::pair(a.group->order(), a.name) < std::pair(b.group->order(), b.name);
  });
  return out;
}

json unknown(const std::string& what, const std::string& name) {
  return error_item(name, "unknown-reference", "unknown " + what + " '" + name + "'");
}

json rho_wedge_field(const GroupPtr& g) {
  if (!wedge_applicable(g)) return "n/a";
  auto k = rho_wedge(g).k;
  return k ? json(*k) : json("inf");
}

json analyze(const GroupPtr& g, const Caps& caps) {
  auto item = ok_item(g->name());
  item["order"] = g->order();
  item["abelian"] = g->is_abelian();
  const int cls = nilpotency_class(g);
  item["nilpotency_class"] = cls < 0 ? json(nullptr) : json(cls);
  item["perfect"] = is_perfect(g);
  item["soluble"] = is_soluble(g);
  const auto stats = commuting_pairs(g, caps);
  item["classes"] = stats.class_count;
  item["pairs"] = big(stats.pairs);
  item["fraction"] = fraction(stats.fraction);
  item["spread"] = conjugate_spread(g, caps).spread;
  item["prufer_rank"] = prufer_rank(g, caps);
  const auto w = neumann_search(g, caps);
  item["neumann"] = {{"k_size", w.k_size},
                     {"n_size", w.n.size()},
                     {"n_index", w.n_index},
                     {"n_commutator", w.n_commutator},
                     {"value", big(w.value)},
                     {"bound_holds", w.bound_holds}};
  item["rho_r"] = core_quotient_rank(g, caps);
  item["rho_wedge"] = rho_wedge_field(g);
  return item;
}

json neumann_item(const GroupPtr& g, const Caps& caps) {
  auto item = ok_item(g->name());
  const auto w = neumann_search(g, caps);
  item["order"] = g->order();
  item["k"] = w.k.elements();
  item["n"] = w.n.elements();
  item["k_size"] = w.k_size;
  item["n_size"] = w.n.size();
  item["n_index"] = w.n_index;
  item["n_commutator"] = w.n_commutator;
  item["value"] = big(w.value);
  item["admissible_pairs"] = w.admissible_pairs;
  item["pairs"] = big(w.pairs);
  item["lower_bound"] = fraction(make_rational(BigInt(g->order()) * g->order(), w.value));
  item["bound_holds"] = w.bound_holds;
  return item;
}

Report cmd_groupwise(const Job& job, const Corpus& corpus, json (*fn)(const GroupPtr&, const Caps&)) {
  Report report;
  const auto targets = select_groups(job, corpus);
  report.items = fan_out(targets.size(), job.jobs, [&](std::size_t i) {
    const auto& t = targets[i];
    if (!t.group) return unknown("group", t.name);
    return guarded(t.name, [&] { return fn(t.group, job.caps); });
  });
  return report;
}

Report cmd_rho(const Job& job, const Corpus& corpus) {
  const auto kind = parse_rho_kind(job.kind);
  if (job.mode != "quotients" && job.mode != "subgroups") {
    throw InvalidInput("--mode must be 'quotients' or 'subgroups'");
  }
  const auto targets = select_groups(job, corpus);
  struct Contribution {
    std::optional<BigInt> value;
    bool counted = false;
  };
  std::vector<Contribution> contrib(targets.size());
  auto errors = fan_out(targets.size(), job.jobs, [&](std::size_t i) {
    const auto& t = targets[i];
    if (!t.group) return unknown("group", t.name);
    return guarded(t.name, [&] {
      auto table = rho_table({t.group}, kind, t.group->order(), job.mode, job.caps);
      const auto& entry = table.entries.back();
      contrib[i] = {entry.value, !entry.groups.empty()};
      return ok_item(t.name);
    });
  });

  std::size_t max_order = job.max_order;
  if (max_order == 0) {
    for (const auto& t : targets) {
      if (t.group) max_order = std::max(max_order, t.group->order());
    }
  }
  Report report;
  report.job["kind"] = to_string(kind);
  report.job["mode"] = job.mode;
  report.job["max_order"] = max_order;
  for (std::size_t order = 1; order <= max_order; ++order) {
    std::optional<BigInt> value;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& t = targets[i];
      if (!t.group || t.group->order() != order || errors[i].at("status") != "ok" || !contrib[i].counted) continue;
      names.push_back(t.name);
      const auto& v = contrib[i].value;
      if (!v) continue;
      const bool better = !value || (kind == RhoKind::r ? *v > *value : *v < *value);
      if (better) value = v;
    }
    std::sort(names.begin(), names.end());
    auto item = ok_item(std::to_string(order));
    item["order"] = order;
    item["value"] = value ? big(*value) : json("inf");
    item["groups"] = names;
    report.items.push_back(std::move(item));
  }
  for (auto& e : errors) {
    if (e.at("status") != "ok") report.items.push_back(std::move(e));
  }
  return report;
}

json power_item(const std::string& name, const GroupPtr& base, std::size_t atoms, const Caps& caps) {
  auto item = ok_item(name);
  const auto ring = FiniteBooleanRing::with_atoms(atoms);
  item["base"] = base->name();
  item["atoms"] = atoms;
  const auto mat = materialize_bp_group(base, ring, caps);
  item["order"] = mat.group()->order();
  const auto corr = verify_ideal_correspondence(base, ring, caps);
  item["normal_subgroups"] = corr.normal_subgroups.size();
  item["ideals"] = corr.ideal_count;
  item["correspondence_holds"] = corr.holds;
  item["non_ideal_normal_subgroups"] = corr.non_ideal.size();
  json quotients = json::array();
  for (const auto& ideal : enumerate_ideals(ring)) {
    const auto iso = bp_quotient_iso(base, ring, ideal, caps);
    quotients.push_back({{"ideal_support", ideal.support()},
                         {"m", iso.m},
                         {"order", iso.quotient.group->order()},
                         {"verified", iso.iso.is_homomorphism() && iso.iso.is_injective() && iso.iso.is_surjective()}});
  }
  item["quotients"] = quotients;
  return item;
}

Report cmd_boolean_power(const Job& job, const Corpus& corpus) {
  std::vector<PowerSpec> specs;
  if (!job.base.empty()) {
    if (job.atoms == 0) throw InvalidInput("--atoms must be positive");
    specs.push_back({job.base + "^B" + std::to_string(job.atoms), job.base, job.atoms});
  } else if (job.targets.empty()) {
    specs = corpus.powers;
  } else {
    for (const auto& name : job.targets) {
      auto it = std::find_if(corpus.powers.begin(), corpus.powers.end(), [&](const PowerSpec& p) { return p.name == name; });
      specs.push_back(it == corpus.powers.end() ? PowerSpec{name, {}, 0} : *it);
    }
  }
  Report report;
  report.items = fan_out(specs.size(), job.jobs, [&](std::size_t i) {
    const auto& s = specs[i];
    if (s.base.empty()) return unknown("boolean power", s.name);
    auto base = corpus.find(s.base);
    if (!base) return unknown("group", s.base);
    return guarded(s.name, [&] { return power_item(s.name, base, s.atoms, job.caps); });
  });
  return report;
}

json tower_item(const TowerSpec& spec, const Corpus& corpus, const Caps& caps) {
  auto item = ok_item(spec.name);
  const auto sys = build_tower(spec, corpus, caps);
  std::vector<std::size_t> orders;
  for (const auto& g : sys.levels()) orders.push_back(g->order());
  item["levels"] = orders;
  const auto cp = cp_sequence(sys, caps);
  json cps = json::array();
  bool non_increasing = true;
  for (std::size_t n = 0; n < cp.size(); ++n) {
    cps.push_back(fraction(cp[n]));
    if (n > 0 && cp[n] > cp[n - 1]) non_increasing = false;
  }
  item["cp"] = cps;
  item["cp_non_increasing"] = non_increasing;
  if (!spec.power.empty()) {
    bool law = true;
    Rational expected = 1;
    for (const auto& c : cp) {
      expected *= cp.front();
      law = law && c == expected;
    }
    item["cp_power_law"] = law;
  }
  const auto whole = Subgroup::whole(sys.top());
  const auto check = commutator_level_check(sys, whole, whole);
  item["commutator_check"] = {{"passed", check.passed},
                              {"first_failing_level", check.first_failing_level ? json(*check.first_failing_level) : json(nullptr)},
                              {"orders", check.commutator_orders}};
  return item;
}

Report cmd_inverse_system(const Job& job, const Corpus& corpus) {
  std::vector<std::optional<TowerSpec>> specs;
  std::vector<std::string> names;
  if (job.targets.empty()) {
    for (const auto& t : corpus.towers) {
      specs.emplace_back(t);
      names.push_back(t.name);
    }
  } else {
    for (const auto& name : job.targets) {
      auto it = std::find_if(corpus.towers.begin(), corpus.towers.end(), [&](const TowerSpec& t) { return t.name == name; });
      specs.push_back(it == corpus.towers.end() ? std::nullopt : std::optional<TowerSpec>(*it));
      names.push_back(name);
    }
  }
  Report report;
  report.items = fan_out(specs.size(), job.jobs, [&](std::size_t i) {
    if (!specs[i]) return unknown("tower", names[i]);
    return guarded(names[i], [&] { return tower_item(*specs[i], corpus, job.caps); });
  });
  return report;
}

json ring_item(const ActionSpec& spec, const Corpus& corpus, const Caps& caps) {
  auto item = ok_item(spec.name);
  auto action = std::make_shared<const GModuleAction>(build_action(spec, corpus, caps));
  if (spec.v.size() != spec.dim) throw InvalidInput("v has wrong dimension");
  for (auto x : spec.v) {
    if (x >= spec.p) throw InvalidInput("v has an entry outside GF(p)");
  }
  item["group"] = spec.group;
  item["p"] = spec.p;
  item["dim"] = spec.dim;
  item["v"] = spec.v;
  const auto faith = faithfulness_report(*action);
  item["faithfulness"] = {{"kernel_size", faith.kernel.size()},
                          {"regular_vector", faith.regular_vector ? json(action->decode(*faith.regular_vector)) : json(nullptr)}};
  const auto span = orbit_span_check(*action, spec.v);
  item["spans"] = span.spans;
  if (!span.spans) throw PreconditionFailed("translates of v do not span V");
  item["translate_bound"] = translate_decomposition(*action, spec.v, spec.v).bound;
  const auto rc = ring_construct(action, spec.v, caps);
  item["annihilator_dim"] = rc.annihilator_dim;
  item["well_defined"] = rc.well_defined();
  if (!rc.well_defined()) {
    const auto& w = *rc.witness;
    item["witness"] = {{"left", w.left}, {"annihilator_element", w.annihilator_element}, {"product", w.product}};
    return item;
  }
  const auto& ring = *rc.ring;
  item["size"] = ring.size();
  item["commutative"] = ring.is_commutative();
  item["associative"] = ring.is_associative();
  const auto nil = nilpotent_free_check(ring);
  item["nilpotent_free"] = nil.nilpotent_free;
  item["nilpotent_witness"] = nil.witness ? json(action->decode(*nil.witness)) : json(nullptr);
  const auto agree = decomposition_agreement(ring);
  item["agreement"] = {{"checked", agree.checked}, {"agrees", agree.agrees}};
  if (ring.is_commutative() && nil.nilpotent_free) {
    const auto d = mr_decompose(ring.to_algebra(spec.name));
    std::vector<std::size_t> sizes;
    for (const auto& f : d.factors) sizes.push_back(f.field.size());
    item["field_factors"] = sizes;
  } else {
    item["field_factors"] = nullptr;
  }
  return item;
}

Report cmd_ring(const Job& job, const Corpus& corpus) {
  std::vector<std::optional<ActionSpec>> specs;
  std::vector<std::string> names;
  if (job.targets.empty()) {
    for (const auto& a : corpus.actions) {
      specs.emplace_back(a);
      names.push_back(a.name);
    }
  } else {
    for (const auto& name : job.targets) {
      auto it = std::find_if(corpus.actions.begin(), corpus.actions.end(), [&](const ActionSpec& a) { return a.name == name; });
      specs.push_back(it == corpus.actions.end() ? std::nullopt : std::optional<ActionSpec>(*it));
      names.push_back(name);
    }
  }
  Report report;
  report.items = fan_out(specs.size(), job.jobs, [&](std::size_t i) {
    if (!specs[i]) return unknown("action", names[i]);
    return guarded(names[i], [&] { return ring_item(*specs[i], corpus, job.caps); });
  });
  return report;
}

Report cmd_inequalities(const Job& job, const Corpus& corpus) {
  const auto targets = select_groups(job, corpus);
  Report report;
  std::map<std::size_t, std::vector<GroupPtr>> by_order;
  for (const auto& t : targets) {
    if (!t.group) {
      report.items.push_back(unknown("group", t.name));
      continue;
    }
    by_order[t.group->order()].push_back(t.group);
  }
  std::vector<std::pair<std::size_t, std::vector<GroupPtr>>> buckets(by_order.begin(), by_order.end());
  auto rows = fan_out(buckets.size(), job.jobs, [&](std::size_t i) {
    const auto& [order, groups] = buckets[i];
    return guarded(std::to_string(order), [&] {
      const auto rep = verify_inequalities(groups, job.beta, job.caps);
      auto item = ok_item(std::to_string(order));
      item["order"] = order;
      if (!rep.one.empty()) {
        const auto& r = rep.one.front();
        item["one"] = {{"rho_r", r.rho_r}, {"beta", big(r.beta)}, {"lhs", fraction(r.lhs)},
                       {"rho_com", big(r.rho_com)}, {"holds", r.holds}};
      } else {
        item["one"] = nullptr;
      }
      if (!rep.two.empty()) {
        const auto& r = rep.two.front();
        item["two"] = {{"p", r.p},
                       {"log_p_order", r.log_p_order},
                       {"rho_wedge", r.rho_wedge},
                       {"exponent2", r.exponent2},
                       {"lhs_squared", fraction(r.lhs_squared)},
                       {"rho_com", big(r.rho_com)},
                       {"intermediate", fraction(r.intermediate)},
                       {"lhs_below_intermediate", r.lhs_below_intermediate},
                       {"intermediate_holds", r.intermediate_holds},
                       {"holds", r.holds}};
        item["two_skipped"] = nullptr;
      } else {
        item["two"] = nullptr;
        item["two_skipped"] = rep.two_skipped.empty() ? json(nullptr) : json(rep.two_skipped.front().second);
      }
      item["all_hold"] = rep.all_hold;
      return item;
    });
  });
  bool all_hold = true;
  for (auto& r : rows) {
    if (r.at("status") == "ok") all_hold = all_hold && r.at("all_hold").get<bool>();
    report.items.push_back(std::move(r));
  }
  report.summary["all_hold"] = all_hold;
  report.job["beta_table"] = job.beta ? json(job.beta_source) : json(nullptr);
  return report;
}

}  // namespace

std::map<std::size_t, BigInt> load_beta_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open beta table " + path.string());
  std::map<std::size_t, BigInt> out;
  try {
    const auto j = json::parse(in);
    if (!j.is_object()) throw InvalidInput(path.string() + ": beta table must be an object {\"r\": beta}");
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      const auto r = std::stoul(key, &used);
      if (used != key.size()) throw InvalidInput(path.string() + ": key '" + key + "' is not an integer");
      BigInt b = value.is_string() ? BigInt(value.get<std::string>()) : BigInt(value.get<std::int64_t>());
      if (b <= 0) throw InvalidInput(path.string() + ": beta(" + key + ") must be positive");
      out[r] = b;
    }
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return out;
}

Report run_job(const Job& job, const Corpus& corpus) {
  Report report;
  if (job.command == "analyze-group") {
    report = cmd_groupwise(job, corpus, analyze);
  } else if (job.command == "neumann") {
    report = cmd_groupwise(job, corpus, neumann_item);
  } else if (job.command == "rho") {
    report = cmd_rho(job, corpus);
  } else if (job.command == "boolean-power") {
    report = cmd_boolean_power(job, corpus);
  } else if (job.command == "inverse-system") {
    report = cmd_inverse_system(job, corpus);
  } else if (job.command == "ring-from-module") {
    report = cmd_ring(job, corpus);
  } else if (job.command == "verify-inequalities") {
    report = cmd_inequalities(job, corpus);
  } else {
    throw InvalidInput("unknown command '" + job.command + "'");
  }
  report.command = job.command;
  json echo;
  echo["corpus"] = corpus.source;
  echo["targets"] = job.targets;
  echo["caps"] = {{"order", job.caps.order}, {"subgroups", job.caps.subgroup_count}};
  for (const auto& [key, value] : report.job.items()) echo[key] = value;
  report.job = echo;
  return report;
}

}  // namespace profin::cli
