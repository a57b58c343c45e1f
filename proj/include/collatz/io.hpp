#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "collatz/levels.hpp"
#include "collatz/stats.hpp"

namespace collatz {

enum class LevelsFormat { Csv, Jsonl };

// CSV: header "x,e,level,s,touch,level_max,ender,exit", one row per x in
// 1..bound, absent fields blank, LF line endings. JSONL: one object per
// non-empty level, keys starter/elements/exit in that order (exit omitted
// for the level of 1); needs retained element lists. Returns rows (CSV) or
// records (JSONL) written.
std::uint64_t export_levels(const LevelTable& table,
                            const std::filesystem::path& path,
                            LevelsFormat format);

// Rebuilds a table from an export. CSV restores a streaming table over the
// full 1..N range; JSONL restores a retained table whose bound is the
// largest starter present. Exports of the restored table match the file
// byte for byte.
LevelTable import_levels(const std::filesystem::path& path, LevelsFormat format);

// CSV header "n,nz,z,nz_ratio,cum_e,maximal,starter_avg"; ratios carry six
// decimals. Rejects an empty series. Returns data rows written.
std::uint64_t export_stats(const StatsSeries& series,
                           const std::filesystem::path& path);

// num / den with exactly six decimals, ties rounded to even.
std::string format_fixed6(std::uint64_t num, std::uint64_t den);

struct OeisFixtureRow {
  Value n = 0;
  std::vector<Value> terms;  // full orbit from n down to 1
};

struct OeisFixture {
  std::vector<OeisFixtureRow> rows;
};

// Embedded orbit rows from OEIS A070165: n = 1..20 plus 27.
const OeisFixture& oeis_fixture();

struct CrosscheckReport {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> mismatches;  // starting values that disagreed
};

// Recomputes each fixture orbit with trajectory() and compares term by term.
CrosscheckReport oeis_crosscheck(const OeisFixture& fixture = oeis_fixture());

}  // namespace collatz
