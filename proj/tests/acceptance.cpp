// Acceptance gate: one criterion per section, one [PASS]/[FAIL] line each.
// Exit code is the number of failed criteria. Time limits are pinned here:
// criterion 1 must finish under 1 ms, 3 and 4 under 10 s, 5 under 60 s.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "collatz/cycles.hpp"
#include "collatz/io.hpp"
#include "collatz/levels.hpp"
#include "collatz/odd_levels.hpp"
#include "collatz/stats.hpp"

namespace fs = std::filesystem;
using namespace collatz;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title,
               const std::function<void(Check&)>& body) {
  Check check;
  try {
    body(check);
  } catch (const std::exception& err) {
    check.expect(false, std::string("exception: ") + err.what());
  }
  if (check.ok) {
    std::cout << "[PASS] criterion " << id << ": " << title << "\n";
  } else {
    ++failures;
    std::cout << "[FAIL] criterion " << id << ": " << title << " -- "
              << check.detail << "\n";
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

fs::path temp_root() {
  static const fs::path root = [] {
    const fs::path p = fs::temp_directory_path() /
                       ("collatz_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return root;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = temp_root() / ("cli_out_" + std::to_string(counter++));
  const std::string command =
      std::string(CLI_BIN_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

BuildConfig retained() {
  BuildConfig config;
  config.retain_elements = true;
  return config;
}

// Reference tables for 1..7: full levels and their odd-compressed rows.
const std::vector<std::vector<Value>> kLevels7 = {
    {1},
    {2},
    {3, 10, 5, 16, 8, 4},
    {},
    {},
    {6},
    {7, 22, 11, 34, 17, 52, 26, 13, 40, 20},
};
const std::vector<std::vector<Value>> kOdds7 = {
    {1}, {}, {3, 5}, {}, {}, {}, {7, 11, 17, 13},
};

std::uint64_t brute_force_steps(Value v) {
  std::uint64_t steps = 0;
  while (v != 1) {
    v = v % 2 ? 3 * v + 1 : v / 2;
    ++steps;
  }
  return steps;
}

}  // namespace

int main() {
  criterion(1, "reference rows for 1..7 reproduce exactly in under 1 ms", [](Check& c) {
    build_levels(7, retained());  // warm-up, outside the timed window
    const auto start = Clock::now();
    const LevelTable t = build_levels(7, retained());
    for (std::uint64_t x = 1; x <= 7; ++x) {
      if (t.elements(x) != kLevels7[x - 1]) {
        c.expect(false, "level " + std::to_string(x) + " differs");
        return;
      }
      if (filter_odds(t.elements(x)) != kOdds7[x - 1]) {
        c.expect(false, "odd row " + std::to_string(x) + " differs");
        return;
      }
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 0.001,
             "took " + std::to_string(elapsed * 1000) + " ms, limit 1 ms");
  });

  criterion(2, "query 4 --max 10 reports the worked-example values", [](Check& c) {
    const CliResult r = run_cli("query 4 --max 10");
    c.expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    c.expect(contains(r.out, "touch=7\n"), "touch line missing: " + r.out);
    c.expect(contains(r.out, "level=3\n"), "level line missing");
    c.expect(contains(r.out, "s=2\n"), "s line missing");
    c.expect(contains(r.out, "e=0\n"), "e line missing");
    const CliResult help = run_cli("query --help");
    c.expect(contains(help.out, "s(4)=2") && contains(help.out, "s(4)=3"),
             "help text must state both step conventions");
  });

  criterion(3, "verify --max 100000 passes items 1..6 plus structure, under 10 s",
            [](Check& c) {
    const auto start = Clock::now();
    const CliResult r = run_cli("verify --max 100000 --lemmas 1,2,3,4,5,6");
    c.expect(r.exit_code == 0, "verify exited " + std::to_string(r.exit_code));
    c.expect(contains(r.out, "result=pass"), "report did not pass");

    const std::uint64_t n = 100000;
    const LevelTable t = build_levels(n, retained());
    std::vector<std::uint8_t> hits(n + 1, 0);
    for (std::uint64_t x = 1; x <= n; ++x) {
      const auto& elems = t.elements(x);
      if (x % 2 == 0 && elems.size() > 1) {
        c.expect(false, "even starter " + std::to_string(x) + " has e >= 2");
        return;
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] <= n) ++hits[elems[i]];
        if (i > 0 && elems[i] <= x) {
          c.expect(false, "member " + std::to_string(elems[i]) +
                              " does not exceed starter " + std::to_string(x));
          return;
        }
      }
    }
    for (std::uint64_t v = 1; v <= n; ++v)
      if (hits[v] != 1) {
        c.expect(false, "value " + std::to_string(v) + " covered " +
                            std::to_string(hits[v]) + " times");
        return;
      }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 10.0,
             "took " + std::to_string(elapsed) + " s, limit 10 s");
  });

  criterion(4, "collatz3 --max 100000 agrees by both routes, under 10 s", [](Check& c) {
    const auto start = Clock::now();
    const CliResult r = run_cli("collatz3 --max 100000");
    c.expect(r.exit_code == 0, "exited " + std::to_string(r.exit_code));
    c.expect(contains(r.out, "agree=true"), "routes disagreed: " + r.out);
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 10.0,
             "took " + std::to_string(elapsed) + " s, limit 10 s");
  });

  criterion(5, "starter ratios through 10^6: decreasing, below 0.5, counts exact, under 60 s",
            [](Check& c) {
    const auto start = Clock::now();
    const LevelTable t = build_levels(1000000);  // streaming, no element lists
    const StatsSeries series = stats_series(t, {1000, 10000, 100000, 1000000});
    c.expect(series.rows.size() == 4, "expected 4 checkpoint rows");
    const std::uint64_t expected_nz[] = {433, 4327, 43267, 432364};
    double previous = 1.0;
    for (std::size_t i = 0; i < series.rows.size(); ++i) {
      const StatsRow& row = series.rows[i];
      c.expect(row.nz + row.z == row.n, "nz + z must equal n exactly");
      c.expect(row.nz == expected_nz[i],
               "nz(" + std::to_string(row.n) + ") = " + std::to_string(row.nz) +
                   ", reference " + std::to_string(expected_nz[i]));
      const double ratio = row.nz_ratio();
      c.expect(ratio < 0.5, "ratio not below 0.5");
      c.expect(ratio < previous, "ratio series must strictly decrease");
      previous = ratio;
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 60.0,
             "took " + std::to_string(elapsed) + " s, limit 60 s");
  });

  criterion(6, "cycle bounds: pinned values, full parity cover, no cyclic pairs",
            [](Check& c) {
    c.expect(cycle_divisor_bound(1) == 2, "bound(1)");
    c.expect(cycle_divisor_bound(2) == 4, "bound(2)");
    c.expect(cycle_divisor_bound(5) == 8, "bound(5)");
    const PqBounds hundred = pq_bounds(100);
    c.expect(hundred.p_max == 38 && hundred.q_min == 62, "pq_bounds(100)");
    for (std::uint64_t e = 2; e <= 10000; ++e) {
      const PqBounds b = pq_bounds(e);
      const std::uint64_t total = b.p_max + b.q_min;
      if (total != e && total != e + 1) {
        c.expect(false, "p+q outside {e, e+1} at e=" + std::to_string(e));
        return;
      }
    }
    std::set<int> surviving;
    int classified = 0;
    const Parity parities[] = {Parity::Odd, Parity::Even};
    for (Parity a : parities)
      for (Parity b : parities)
        for (Parity d : parities)
          for (Parity e : parities) {
            const ParityCase result = classify_parity({a, b, d, e});
            if (result.possibility_id) {
              ++classified;
              if (!result.refuted) surviving.insert(*result.possibility_id);
            }
          }
    c.expect(classified == 5, "expected 5 reachable parity patterns");
    c.expect(surviving == std::set<int>{1, 4}, "survivors must be ids 1 and 4");
    const LevelTable t = build_levels(10000, retained());
    c.expect(search_cyclic_pairs(t, 10000).empty(),
             "a cyclic pair appeared below 10^4");
  });

  criterion(7, "independent oracles: s(27), the 9232 peak, and the OEIS rows",
            [](Check& c) {
    StoppingCache cache;
    c.expect(stopping_steps(27, cache) == 111, "s(27) must be 111");
    c.expect(brute_force_steps(27) == 111, "brute-force s(27) must be 111");
    const std::vector<Value> orbit = trajectory(27);
    Value peak = 0;
    for (Value v : orbit) peak = std::max(peak, v);
    c.expect(peak == 9232, "peak of 27 must be 9232");
    c.expect(orbit.size() == 112, "orbit of 27 must hold 112 terms");
    const CrosscheckReport report = oeis_crosscheck();
    c.expect(report.checked == 21, "fixture must hold 21 rows");
    c.expect(report.mismatches.empty(), "fixture rows disagreed");
    for (const auto& row : oeis_fixture().rows) {
      if (trajectory(row.n) != row.terms) {
        c.expect(false, "trajectory(" + std::to_string(row.n) + ") differs");
        return;
      }
      if (row.n <= 20)
        c.expect(brute_force_steps(row.n) + 1 == row.terms.size(),
                 "row length mismatch at n=" + std::to_string(row.n));
    }
  });

  criterion(8, "byte-identical exports across rebuilds and round-trips at 10^4",
            [](Check& c) {
    const fs::path dir = temp_root();
    const LevelTable first = build_levels(10000, retained());
    const LevelTable second = build_levels(10000, retained());
    const fs::path csv_a = dir / "a.csv";
    const fs::path csv_b = dir / "b.csv";
    const fs::path jsonl_a = dir / "a.jsonl";
    const fs::path jsonl_b = dir / "b.jsonl";
    export_levels(first, csv_a, LevelsFormat::Csv);
    export_levels(second, csv_b, LevelsFormat::Csv);
    export_levels(first, jsonl_a, LevelsFormat::Jsonl);
    export_levels(second, jsonl_b, LevelsFormat::Jsonl);
    c.expect(slurp(csv_a) == slurp(csv_b), "CSV exports differ across builds");
    c.expect(slurp(jsonl_a) == slurp(jsonl_b), "JSONL exports differ across builds");

    const fs::path csv_rt = dir / "rt.csv";
    export_levels(import_levels(csv_a, LevelsFormat::Csv), csv_rt,
                  LevelsFormat::Csv);
    c.expect(slurp(csv_a) == slurp(csv_rt), "CSV round-trip changed bytes");
    const fs::path jsonl_rt = dir / "rt.jsonl";
    export_levels(import_levels(jsonl_a, LevelsFormat::Jsonl), jsonl_rt,
                  LevelsFormat::Jsonl);
    c.expect(slurp(jsonl_a) == slurp(jsonl_rt), "JSONL round-trip changed bytes");
  });

  fs::remove_all(temp_root());
  if (failures == 0)
    std::cout << "all 8 criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
