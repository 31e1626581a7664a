#include "cli/app.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "profin/errors.hpp"

namespace profin::cli {

namespace {

struct Options {
  std::string corpus_dir;
  std::string out_path;
  std::string format = "json";
  std::size_t cap_order = default_caps().order;
  std::size_t cap_subgroups = default_caps().subgroup_count;
  std::string beta_table;
  std::size_t jobs = 1;
  std::vector<std::string> targets;
  std::string kind = "com";
  std::size_t max_order = 0;
  std::string mode = "quotients";
  std::string base;
  std::size_t atoms = 0;
  std::string export_dir;
};

void add_targets(CLI::App* sub, Options& opt, const std::string& what) {
  sub->add_option("targets", opt.targets, what + " names (default: all in the corpus)");
}

int emit(const std::string& text, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "profin: cannot write " << opt.out_path << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations on finite groups, Boolean powers and module rings", "profin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(PROFIN_VERSION));

  app.add_option("--corpus", opt.corpus_dir, "Corpus directory (default: bundled corpus)");
  app.add_option("--out", opt.out_path, "Write the report to this file");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cap-order", opt.cap_order, "Largest group order to build")
      ->check(CLI::Range(std::size_t{1}, Caps::kMaxOrder));
  app.add_option("--cap-subgroups", opt.cap_subgroups, "Largest number of subgroups per enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--beta-table", opt.beta_table, "JSON object {\"r\": beta} for inequality one")
      ->check(CLI::ExistingFile);
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 64));

  auto* analyze = app.add_subcommand("analyze-group", "Structural and counting summary per group");
  add_targets(analyze, opt, "Group");
  auto* neumann = app.add_subcommand("neumann", "Minimising normal pair K <= N per group");
  add_targets(neumann, opt, "Group");
  auto* rho = app.add_subcommand("rho", "Order-indexed rho table over the corpus");
  add_targets(rho, opt, "Group");
  rho->add_option("--kind", opt.kind, "com, r or wedge")->check(CLI::IsMember({"com", "r", "wedge"}));
  rho->add_option("--max-order", opt.max_order, "Last order in the table (default: largest corpus order)");
  rho->add_option("--mode", opt.mode, "quotients or subgroups")->check(CLI::IsMember({"quotients", "subgroups"}));
  auto* power = app.add_subcommand("boolean-power", "Normal subgroups and quotients of P^B");
  add_targets(power, opt, "Boolean power");
  power->add_option("--base", opt.base, "Base group (instead of corpus entries)");
  power->add_option("--atoms", opt.atoms, "Atom count of B")->check(CLI::PositiveNumber);
  auto* tower = app.add_subcommand("inverse-system", "Commuting fractions and commutator checks on towers");
  add_targets(tower, opt, "Tower");
  auto* ring = app.add_subcommand("ring-from-module", "Ring structure on a cyclic module");
  add_targets(ring, opt, "Action");
  auto* ineq = app.add_subcommand("verify-inequalities", "Check both inequalities order by order");
  add_targets(ineq, opt, "Group");
  auto* exporter = app.add_subcommand("export-corpus", "Write the corpus as JSON files");
  exporter->add_option("dir", opt.export_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    Caps caps;
    caps.order = opt.cap_order;
    caps.subgroup_count = opt.cap_subgroups;
    Corpus corpus = opt.corpus_dir.empty() ? bundled_corpus() : load_corpus(opt.corpus_dir, caps);
    for (const auto& w : corpus.warnings) err << "profin: warning: " << w << '\n';

    if (exporter->parsed()) {
      write_corpus(corpus, opt.export_dir);
      return kExitOk;
    }

    Job job;
    job.command = app.get_subcommands().front()->get_name();
    job.targets = opt.targets;
    job.caps = caps;
    job.jobs = opt.jobs;
    job.kind = opt.kind;
    job.max_order = opt.max_order;
    job.mode = opt.mode;
    job.base = opt.base;
    job.atoms = opt.atoms;
    if (!opt.beta_table.empty()) {
      job.beta = load_beta_table(opt.beta_table);
      job.beta_source = opt.beta_table;
    }
    if (!job.base.empty() && !job.targets.empty()) throw InvalidInput("--base cannot be combined with targets");

    const Report report = run_job(job, corpus);
    const std::string text = opt.format == "csv" ? render_csv(report) : render_json(report);
    const int written = emit(text, opt, out, err);
    if (written != kExitOk) return written;
    for (const auto& item : report.items) {
      if (item.at("status") == "error") {
        err << "profin: " << item.at("item").get<std::string>() << ": " << item.at("message").get<std::string>()
            << '\n';
      }
    }
    return report.exit_code();
  } catch (const std::exception& e) {
    err << "profin: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace profin::cli
