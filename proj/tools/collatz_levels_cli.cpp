// Command-line front end: build/query/verify the level decomposition of
// 1..N, export level and stats tables, run the odd-compressed construction
// and the cycle-bound calculators. Results go to stdout as key=value lines;
// diagnostics go to stderr. Exit codes: 0 success, 1 computation or
// verification failure, 2 bad flags.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collatz/cycles.hpp"
#include "collatz/io.hpp"
#include "collatz/levels.hpp"
#include "collatz/odd_levels.hpp"
#include "collatz/stats.hpp"

namespace {

using namespace collatz;

constexpr const char* kStepNote =
    "s counts applications of the map (3x+1 when odd, x/2 when even) until "
    "1 is reached, so s(4)=2 (4->2->1). Write-ups that count the visited "
    "terms instead report s(4)=3; all arithmetic here uses the application "
    "count.";

LevelsFormat parse_format(const std::string& name) {
  return name == "jsonl" ? LevelsFormat::Jsonl : LevelsFormat::Csv;
}

struct BuildArgs {
  std::uint64_t max = 0;
  bool retain = false;
  std::string out;
  std::string format = "csv";
  std::uint64_t dense_cap = 0;
  std::uint64_t budget = kDefaultBudget;
};

BuildConfig to_config(const BuildArgs& args, bool force_retain = false) {
  BuildConfig config;
  config.dense_cap = args.dense_cap;
  config.budget = args.budget;
  config.retain_elements = args.retain || force_retain;
  return config;
}

int run_build(const BuildArgs& args) {
  const bool want_jsonl = !args.out.empty() && parse_format(args.format) == LevelsFormat::Jsonl;
  const LevelTable table = build_levels(args.max, to_config(args, want_jsonl));
  std::uint64_t nz = 0;
  for (std::uint64_t x = 1; x <= table.bound(); ++x)
    if (table.element_count(x) > 0) ++nz;
  std::cout << "bound=" << table.bound() << '\n'
            << "nz=" << nz << '\n'
            << "cum_e=" << table.visited_total() << '\n'
            << "maximal=" << maximal_of(table, table.bound()) << '\n';
  if (!args.out.empty()) {
    const std::uint64_t written =
        export_levels(table, args.out, parse_format(args.format));
    std::cout << "wrote=" << args.out << '\n' << "rows=" << written << '\n';
  }
  return 0;
}

int run_query(Value x, const std::optional<std::uint64_t>& max,
              const std::string& in, const std::string& format) {
  std::optional<LevelTable> table;
  if (!in.empty())
    table = import_levels(in, parse_format(format));
  else
    table = build_levels(*max);
  const QueryResult r = query(*table, x);
  std::cout << "touch=" << r.touch << '\n'
            << "level=" << r.level << '\n'
            << "s=" << r.s << '\n'
            << "e=" << r.e << '\n'
            << "max=" << r.max_in_level << '\n';
  return 0;
}

int run_verify(const BuildArgs& args, const std::vector<int>& lemmas) {
  const LevelTable table = build_levels(args.max, to_config(args));
  const LemmaReport report = verify_lemmas(table, args.max, lemmas);
  for (const auto& entry : report.entries) {
    std::cout << "lemma " << entry.id << ": "
              << (entry.status == LemmaStatus::Verified ? "verified" : "reported")
              << " (" << entry.checked << " checked, "
              << entry.violations.size() << " violations)";
    if (!entry.note.empty()) std::cout << " " << entry.note;
    std::cout << '\n';
    for (const auto& witness : entry.violations)
      std::cout << "  violation: " << witness << '\n';
  }
  const bool ok = report.verified_ok();
  std::cout << "result=" << (ok ? "pass" : "fail") << '\n';
  return ok ? 0 : 1;
}

int run_stats(const BuildArgs& args, const std::vector<std::uint64_t>& checkpoints,
              const std::string& out) {
  const LevelTable table = build_levels(args.max, to_config(args));
  const StatsSeries series = stats_series(table, checkpoints);
  const std::uint64_t written = export_stats(series, out);
  std::cout << "wrote=" << out << '\n' << "rows=" << written << '\n';
  return 0;
}

int run_collatz3(const BuildArgs& args) {
  const LevelTable table = build_levels(args.max, to_config(args, true));
  const EquivalenceReport report = check_equivalence(table, args.max);
  std::cout << "agree=" << (report.agree ? "true" : "false") << '\n'
            << "checked=" << report.levels_checked << '\n';
  if (report.first_mismatch)
    std::cout << "first_mismatch=" << *report.first_mismatch << '\n';
  return report.agree ? 0 : 1;
}

int run_cycle_bounds(const std::optional<std::uint64_t>& odd_steps,
                     const std::optional<std::uint64_t>& level_size) {
  if (odd_steps) {
    const CycleBoundReport report = cycle_bound_report(*odd_steps, level_size);
    std::cout << "sum_k_min=" << report.sum_k_min << '\n';
    if (report.p_max)
      std::cout << "p_max=" << *report.p_max << '\n'
                << "q_min=" << *report.q_min << '\n';
  } else {
    const PqBounds bounds = pq_bounds(*level_size);
    std::cout << "p_max=" << bounds.p_max << '\n'
              << "q_min=" << bounds.q_min << '\n';
  }
  return 0;
}

int run_crosscheck() {
  const CrosscheckReport report = oeis_crosscheck();
  std::cout << "checked=" << report.checked << '\n'
            << "mismatches=" << report.mismatches.size() << '\n';
  for (std::uint64_t n : report.mismatches)
    std::cout << "mismatch=" << n << '\n';
  return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level decomposition of 1..N under the 3x+1 map"};
  app.require_subcommand(1);

  BuildArgs args;
  const auto add_build_flags = [&args](CLI::App* cmd, bool need_max = true) {
    auto* max = cmd->add_option("--max", args.max, "Upper bound N of the range 1..N")
                    ->check(CLI::PositiveNumber);
    if (need_max) max->required();
    cmd->add_option("--dense-cap", args.dense_cap,
                    "Bit-array ceiling of the seen set (default 8*N)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", args.budget,
                    "Max elements in one level before giving up")
        ->check(CLI::PositiveNumber);
    return max;
  };

  auto* build = app.add_subcommand("build", "Construct the levels for 1..N");
  add_build_flags(build);
  build->add_flag("--retain", args.retain, "Keep full element lists in memory");
  build->add_option("--out", args.out, "Export the table to this file");
  build->add_option("--format", args.format, "Export format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* query_cmd = app.add_subcommand(
      "query", std::string("Print touch/level/s/e/max for one value. ") + kStepNote);
  Value query_x = 0;
  std::string query_in;
  std::string query_format = "csv";
  std::optional<std::uint64_t> query_max;
  query_cmd->add_option("value", query_x, "Value to look up")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* qmax = query_cmd->add_option("--max", query_max, "Build a fresh table over 1..N")
                   ->check(CLI::PositiveNumber);
  auto* qin = query_cmd->add_option("--in", query_in, "Load a previously exported table");
  query_cmd->add_option("--format", query_format, "Format of --in")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  qmax->excludes(qin);
  qin->excludes(qmax);

  auto* verify = app.add_subcommand("verify", "Run the lemma suite over 1..N");
  add_build_flags(verify);
  std::vector<int> lemmas;
  verify->add_option("--lemmas", lemmas, "Comma-separated subset of 1..9 (default all)")
      ->delimiter(',');

  auto* stats = app.add_subcommand("stats", "Export the checkpoint series");
  add_build_flags(stats);
  std::vector<std::uint64_t> checkpoints;
  std::string stats_out;
  stats->add_option("--checkpoints", checkpoints, "Comma-separated checkpoints")
      ->delimiter(',')
      ->required();
  stats->add_option("--out", stats_out, "Output CSV path")->required();

  auto* collatz3 = app.add_subcommand(
      "collatz3", "Build the odd-compressed levels two ways and compare");
  add_build_flags(collatz3);

  auto* cycle = app.add_subcommand("cycle-bounds",
                                   "Arithmetic bounds on a hypothetical cycle");
  std::optional<std::uint64_t> odd_steps;
  std::optional<std::uint64_t> level_size;
  cycle->add_option("--odd-steps", odd_steps,
                    "Number of odd values in the hypothetical cycle")
      ->check(CLI::PositiveNumber);
  cycle->add_option("--level-size", level_size,
                    "Element count of the level carrying the cycle")
      ->check(CLI::PositiveNumber);

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Compare computed orbits against the embedded OEIS A070165 rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (*build) return run_build(args);
    if (*query_cmd) {
      if (query_in.empty() && !query_max) {
        std::cerr << "query needs --max or --in\n";
        return 2;
      }
      return run_query(query_x, query_max, query_in, query_format);
    }
    if (*verify) return run_verify(args, lemmas);
    if (*stats) {
      for (std::uint64_t c : checkpoints)
        if (c > args.max) {
          std::cerr << "checkpoint " << c << " exceeds --max " << args.max << '\n';
          return 2;
        }
      return run_stats(args, checkpoints, stats_out);
    }
    if (*collatz3) return run_collatz3(args);
    if (*cycle) {
      if (!odd_steps && !level_size) {
        std::cerr << "cycle-bounds needs --odd-steps or --level-size\n";
        return 2;
      }
      return run_cycle_bounds(odd_steps, level_size);
    }
    if (*crosscheck) return run_crosscheck();
  } catch (const collatz::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
