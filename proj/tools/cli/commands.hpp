#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cli/corpus.hpp"
#include "cli/report.hpp"
#include "profin/caps.hpp"
#include "profin/rational.hpp"

namespace profin::cli {

struct Job {
  std::string command;
  /// Group, tower, power or action names; empty means everything in the corpus.
  std::vector<std::string> targets;
  Caps caps;
  /// Worker threads; never affects the report.
  std::size_t jobs = 1;

  std::string kind = "com";
  std::size_t max_order = 0;
  std::string mode = "quotients";

  std::string base;
  std::size_t atoms = 0;

  std::optional<std::map<std::size_t, BigInt>> beta;
  std::string beta_source;
};

/// {"r": beta, ...} with positive integer values.
std::map<std::size_t, BigInt> load_beta_table(const std::filesystem::path& path);

/// Throws InvalidInput for an unknown command or bad job options; per-item
/// failures are reported inside the Report.
Report run_job(const Job& job, const Corpus& corpus);

}  // namespace profin::cli
