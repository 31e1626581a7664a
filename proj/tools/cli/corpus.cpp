#include "cli/corpus.hpp"

#include <fstream>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "profin/errors.hpp"
#include "profin/small_groups.hpp"

namespace profin::cli {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

GroupPtr Corpus::find(const std::string& name) const {
  for (const auto& g : groups) {
    if (g->name() == name) return g;
  }
  return nullptr;
}

namespace {

ElementId first_of_order(const GroupPtr& g, std::size_t order) {
  for (ElementId x = 0; x < g->order(); ++x) {
    if (g->element_order(x) == order) return x;
  }
  throw std::logic_error("no element of order " + std::to_string(order) + " in " + g->name());
}

std::vector<ElementId> cyclic_span(const GroupPtr& g, ElementId x) {
  ElementId gens[] = {x};
  return generate(g, gens).elements();
}

std::vector<ElementId> all_of(const GroupPtr& g) { return Subgroup::whole(g).elements(); }

ElementId id_of_permutation(const GroupPtr& g, const Permutation& p) {
  const auto& elems = g->perm_presentation()->elements;
  for (ElementId h = 0; h < elems.size(); ++h) {
    if (elems[h] == p) return h;
  }
  throw std::logic_error("generator not found in " + g->name());
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& j) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

GroupPtr read_group(const fs::path& path, const std::string& name, std::optional<std::size_t> listed_order,
                    const Caps& caps) {
  const auto j = read_json(path);
  try {
    if (j.contains("name") && j.at("name").get<std::string>() != name) {
      throw InvalidInput("name '" + j.at("name").get<std::string>() + "' does not match index entry '" + name + "'");
    }
    GroupPtr g;
    if (j.contains("table")) {
      g = FiniteGroup::from_table(name, j.at("table").get<std::vector<std::vector<ElementId>>>(), caps);
    } else if (j.contains("generators")) {
      std::vector<Permutation> gens;
      for (const auto& images : j.at("generators")) gens.emplace_back(images.get<std::vector<std::uint32_t>>());
      g = FiniteGroup::from_permutations(name, j.at("degree").get<std::size_t>(), gens, caps);
    } else {
      throw InvalidInput("group needs a 'table' or 'degree'/'generators'");
    }
    for (auto stated : {j.contains("order") ? std::optional(j.at("order").get<std::size_t>()) : std::nullopt,
                        listed_order}) {
      if (stated && *stated != g->order()) {
        throw InvalidInput("stated order " + std::to_string(*stated) + " but the group has order " +
                           std::to_string(g->order()));
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

json group_json(const GroupPtr& g) {
  json j;
  j["name"] = g->name();
  j["order"] = g->order();
  const auto& perm = g->perm_presentation();
  if (perm) {
    j["degree"] = perm->degree;
    json gens = json::array();
    for (const auto& p : perm->generators) gens.push_back(p.images());
    j["generators"] = gens;
  } else {
    json table = json::array();
    for (ElementId a = 0; a < g->order(); ++a) {
      auto row = g->row(a);
      table.push_back(std::vector<ElementId>(row.begin(), row.end()));
    }
    j["table"] = table;
  }
  return j;
}

json tower_json(const TowerSpec& t) {
  json j;
  j["name"] = t.name;
  if (!t.power.empty()) {
    j["power"] = t.power;
    j["depth"] = t.depth;
  } else if (!t.group.empty()) {
    j["group"] = t.group;
    j["chain"] = t.chain;
  } else {
    j["levels"] = t.levels;
    j["projections"] = t.projections;
  }
  return j;
}

TowerSpec tower_from(const json& j) {
  TowerSpec t;
  t.name = j.at("name").get<std::string>();
  if (j.contains("power")) {
    t.power = j.at("power").get<std::string>();
    t.depth = j.at("depth").get<std::size_t>();
  } else if (j.contains("group")) {
    t.group = j.at("group").get<std::string>();
    t.chain = j.at("chain").get<std::vector<std::vector<ElementId>>>();
  } else {
    t.levels = j.at("levels").get<std::vector<std::string>>();
    t.projections = j.at("projections").get<std::vector<std::vector<ElementId>>>();
  }
  return t;
}

json action_json(const ActionSpec& a) {
  json j;
  j["name"] = a.name;
  j["group"] = a.group;
  j["p"] = a.p;
  j["dim"] = a.dim;
  json m = json::object();
  for (const auto& [h, matrix] : a.matrices) m[std::to_string(h)] = matrix;
  j["matrices"] = m;
  j["v"] = a.v;
  return j;
}

ActionSpec action_from(const json& j) {
  ActionSpec a;
  a.name = j.at("name").get<std::string>();
  a.group = j.at("group").get<std::string>();
  a.p = j.at("p").get<std::uint32_t>();
  a.dim = j.at("dim").get<std::size_t>();
  for (const auto& [key, value] : j.at("matrices").items()) {
    std::size_t used = 0;
    const auto id = std::stoul(key, &used);
    if (used != key.size()) throw InvalidInput("matrix key '" + key + "' is not an element id");
    a.matrices[static_cast<ElementId>(id)] = value.get<gfp::Matrix>();
  }
  a.v = j.at("v").get<gfp::Vec>();
  return a;
}

template <class T, class F>
std::vector<T> read_list(const fs::path& path, F&& parse) {
  const auto j = read_json(path);
  std::vector<T> out;
  try {
    for (const auto& entry : j) out.push_back(parse(entry));
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace

Corpus bundled_corpus() {
  Corpus c;
  c.source = "bundled";
  for (std::size_t n = 1; n <= 16; ++n) c.groups.push_back(groups::cyclic(n));
  c.groups.push_back(groups::klein_four());
  c.groups.push_back(groups::symmetric(3));
  c.groups.push_back(groups::quaternion());
  c.groups.push_back(groups::dihedral(4));
  c.groups.push_back(groups::alternating(4));
  c.groups.push_back(groups::symmetric(4));
  c.groups.push_back(groups::alternating(5));
  c.groups.push_back(groups::heisenberg(3));
  c.groups.push_back(groups::extraspecial_cyclic(3));

  {
    auto z16 = c.find("Z16");
    const auto g = first_of_order(z16, 16);
    TowerSpec t{"Z16-chain", "Z16", {all_of(z16)}, {}, {}, {}, 0};
    for (std::int64_t e : {2, 4, 8}) t.chain.push_back(cyclic_span(z16, z16->power(g, e)));
    t.chain.push_back({0});
    c.towers.push_back(std::move(t));
  }
  {
    auto s3 = c.find("S3");
    c.towers.push_back({"S3-cosets", "S3", {all_of(s3), cyclic_span(s3, first_of_order(s3, 3)), {0}}, {}, {}, {}, 0});
  }
  {
    auto q8 = c.find("Q8");
    c.towers.push_back({"Q8-cosets",
                        "Q8",
                        {all_of(q8), cyclic_span(q8, first_of_order(q8, 4)), cyclic_span(q8, first_of_order(q8, 2)), {0}},
                        {},
                        {},
                        {},
                        0});
  }
  {
    // Z2 <- Z4 <- Z8 by reduction of exponents of the chosen generators.
    TowerSpec t;
    t.name = "Z2-Z4-Z8";
    t.levels = {"Z2", "Z4", "Z8"};
    for (std::size_t n = 0; n + 1 < t.levels.size(); ++n) {
      auto lo = c.find(t.levels[n]), hi = c.find(t.levels[n + 1]);
      const auto glo = first_of_order(lo, lo->order()), ghi = first_of_order(hi, hi->order());
      std::vector<ElementId> map(hi->order());
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(hi->order()); ++k) map[hi->power(ghi, k)] = lo->power(glo, k);
      t.projections.push_back(map);
    }
    c.towers.push_back(std::move(t));
  }
  c.towers.push_back({"Z2-power", {}, {}, {}, {}, "Z2", 3});
  c.towers.push_back({"A5-power", {}, {}, {}, {}, "A5", 2});

  c.powers = {{"Z2^B3", "Z2", 3}, {"S3^B3", "S3", 3}, {"A5^B2", "A5", 2}, {"Z4^B2", "Z4", 2}};

  const ElementId flip = first_of_order(c.find("Z2"), 2);
  c.actions.push_back({"swap-GF3", "Z2", 3, 2, {{flip, {{0, 1}, {1, 0}}}}, {1, 0}});
  c.actions.push_back({"regular-Z2-GF2", "Z2", 2, 2, {{flip, {{0, 1}, {1, 0}}}}, {1, 0}});
  c.actions.push_back({"trivial-Z3-GF5", "Z3", 5, 1, {{first_of_order(c.find("Z3"), 3), {{1}}}}, {1}});
  c.actions.push_back({"sign-Z2-GF3", "Z2", 3, 1, {{flip, {{2}}}}, {1}});
  {
    auto z3 = c.find("Z3");
    const auto g = first_of_order(z3, 3);
    c.actions.push_back({"regular-Z3-GF2", "Z3", 2, 3, {{g, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}}, {1, 0, 0}});
  }
  {
    auto s3 = c.find("S3");
    ActionSpec a{"permutation-S3-GF5", "S3", 5, 3, {}, {1, 0, 0}};
    for (const auto& gen : s3->perm_presentation()->generators) {
      gfp::Matrix m(3, gfp::Vec(3, 0));
      for (std::uint32_t i = 0; i < 3; ++i) m[i][gen(i)] = 1;
      a.matrices[id_of_permutation(s3, gen)] = m;
    }
    c.actions.push_back(std::move(a));
  }
  return c;
}

Corpus load_corpus(const fs::path& dir, const Caps& caps) {
  Corpus c;
  c.source = dir.string();
  if (!fs::is_directory(dir)) throw InvalidInput("corpus directory " + dir.string() + " does not exist");
  const auto index_path = dir / "index.json";
  if (!fs::exists(index_path)) {
    c.warnings.push_back("no index.json in " + dir.string() + "; corpus is empty");
    return c;
  }
  const auto index = read_json(index_path);
  std::set<std::string> names;
  try {
    for (const auto& entry : index.value("groups", json::array())) {
      const auto name = entry.at("name").get<std::string>();
      if (!names.insert(name).second) throw InvalidInput(index_path.string() + ": duplicate group name '" + name + "'");
      const auto listed = entry.contains("order") ? std::optional(entry.at("order").get<std::size_t>()) : std::nullopt;
      c.groups.push_back(read_group(dir / entry.at("file").get<std::string>(), name, listed, caps));
    }
    if (index.contains("towers")) c.towers = read_list<TowerSpec>(dir / index.at("towers").get<std::string>(), tower_from);
    if (index.contains("boolean_powers")) {
      c.powers = read_list<PowerSpec>(dir / index.at("boolean_powers").get<std::string>(), [](const json& j) {
        return PowerSpec{j.at("name").get<std::string>(), j.at("base").get<std::string>(), j.at("atoms").get<std::size_t>()};
      });
    }
    if (index.contains("actions")) c.actions = read_list<ActionSpec>(dir / index.at("actions").get<std::string>(), action_from);
  } catch (const json::exception& e) {
    throw InvalidInput(index_path.string() + ": " + e.what());
  }
  return c;
}

void write_corpus(const Corpus& corpus, const fs::path& dir) {
  json index;
  index["format"] = 1;
  json groups = json::array();
  for (const auto& g : corpus.groups) {
    const std::string file = "groups/" + g->name() + ".json";
    groups.push_back({{"name", g->name()}, {"order", g->order()}, {"file", file}});
    write_json(dir / file, group_json(g));
  }
  index["groups"] = groups;
  json towers = json::array();
  for (const auto& t : corpus.towers) towers.push_back(tower_json(t));
  write_json(dir / "towers.json", towers);
  index["towers"] = "towers.json";
  json powers = json::array();
  for (const auto& p : corpus.powers) powers.push_back({{"name", p.name}, {"base", p.base}, {"atoms", p.atoms}});
  write_json(dir / "boolean_powers.json", powers);
  index["boolean_powers"] = "boolean_powers.json";
  json actions = json::array();
  for (const auto& a : corpus.actions) actions.push_back(action_json(a));
  write_json(dir / "actions.json", actions);
  index["actions"] = "actions.json";
  write_json(dir / "index.json", index);
}

namespace {

GroupPtr require(const Corpus& corpus, const std::string& name) {
  auto g = corpus.find(name);
  if (!g) throw InvalidInput("unknown group '" + name + "'");
  return g;
}

}  // namespace

InverseSystem build_tower(const TowerSpec& spec, const Corpus& corpus, const Caps& caps) {
  if (!spec.power.empty()) return direct_power_system(require(corpus, spec.power), spec.depth, caps);
  if (!spec.group.empty()) {
    auto g = require(corpus, spec.group);
    std::vector<Subgroup> chain;
    for (const auto& elems : spec.chain) {
      for (auto x : elems) {
        if (x >= g->order()) throw InvalidInput("chain mentions element " + std::to_string(x) + " outside " + g->name());
      }
      auto sorted = elems;
      std::sort(sorted.begin(), sorted.end());
      chain.push_back(Subgroup::checked(g, sorted));
    }
    return coset_action_system(g, chain, caps).system;
  }
  std::vector<GroupPtr> levels;
  for (const auto& name : spec.levels) levels.push_back(require(corpus, name));
  if (spec.projections.size() + 1 != levels.size()) throw InvalidInput("tower needs one projection per step");
  std::vector<GroupHom> projections;
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    const auto& map = spec.projections[n];
    if (map.size() != levels[n + 1]->order()) throw InvalidInput("projection " + std::to_string(n) + " has wrong length");
    for (auto y : map) {
      if (y >= levels[n]->order()) throw InvalidInput("projection " + std::to_string(n) + " leaves its target");
    }
    projections.emplace_back(levels[n + 1], levels[n], map);
  }
  return InverseSystem::build(levels, projections);
}

GModuleAction build_action(const ActionSpec& spec, const Corpus& corpus, const Caps& caps) {
  return GModuleAction::from_partial(require(corpus, spec.group), spec.p, spec.dim, spec.matrices, caps);
}

}  // namespace profin::cli
