#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "profin/gfp.hpp"
#include "profin/group.hpp"
#include "profin/inverse_system.hpp"
#include "profin/module_ring.hpp"

namespace profin::cli {

/// One of three tower shapes: a coset tower ({group, chain}), explicit
/// levels with projection maps, or a direct-power tower ({power, depth}).
struct TowerSpec {
  std::string name;
  std::string group;
  std::vector<std::vector<ElementId>> chain;
  std::vector<std::string> levels;
  std::vector<std::vector<ElementId>> projections;
  std::string power;
  std::size_t depth = 0;
};

struct PowerSpec {
  std::string name;
  std::string base;
  std::size_t atoms = 0;
};

struct ActionSpec {
  std::string name;
  std::string group;
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::map<ElementId, gfp::Matrix> matrices;
  gfp::Vec v;
};

struct Corpus {
  std::string source;
  std::vector<GroupPtr> groups;
  std::vector<TowerSpec> towers;
  std::vector<PowerSpec> powers;
  std::vector<ActionSpec> actions;
  std::vector<std::string> warnings;

  /// nullptr when absent.
  GroupPtr find(const std::string& name) const;
};

/// Z1..Z16, V4, S3, Q8, D8, A4, S4, A5, Heis27, Ext27c and the default
/// towers, Boolean powers and module actions over them.
Corpus bundled_corpus();

/// Reads DIR/index.json. A missing index yields an empty corpus with a
/// warning; malformed files raise InvalidInput naming the file.
Corpus load_corpus(const std::filesystem::path& dir, const Caps& caps = default_caps());

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

InverseSystem build_tower(const TowerSpec& spec, const Corpus& corpus, const Caps& caps = default_caps());
GModuleAction build_action(const ActionSpec& spec, const Corpus& corpus, const Caps& caps = default_caps());

}  // namespace profin::cli
