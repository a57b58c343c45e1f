#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "collatz/levels.hpp"

namespace collatz {

// 1 when m starts a level (e(m) > 0), else 0.
int lambda_of(const LevelTable& table, Value m);

struct StatsRow {
  std::uint64_t n = 0;
  std::uint64_t nz = 0;           // starters among 1..n
  std::uint64_t z = 0;            // non-starters among 1..n
  std::uint64_t cum_e = 0;        // total elements appended by levels 1..n
  Value maximal = 0;              // largest value appended by levels 1..n
  std::uint64_t starter_sum = 0;  // sum of the starter values among 1..n

  double nz_ratio() const { return static_cast<double>(nz) / static_cast<double>(n); }
  double starter_avg() const {
    return static_cast<double>(starter_sum) / static_cast<double>(n);
  }
};

struct StatsSeries {
  std::vector<StatsRow> rows;
};

// One row per checkpoint; checkpoints must be strictly increasing and
// within 1..table.bound().
StatsSeries stats_series(const LevelTable& table,
                         const std::vector<std::uint64_t>& checkpoints);

enum class LemmaStatus { Verified, Reported };

struct LemmaEntry {
  int id = 0;
  LemmaStatus status = LemmaStatus::Verified;
  std::vector<std::string> violations;  // capped witnesses; empty means clean
  std::uint64_t checked = 0;            // instances examined
  std::optional<double> metric;         // headline number for reported items
  std::vector<std::pair<std::uint64_t, double>> samples;  // (n, value) points
  std::string note;
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;
  // True when no Verified entry has violations.
  bool verified_ok() const;
};

struct LemmaOptions {
  std::uint64_t power_k_max = 100;  // grid for the power-shift identity
  std::uint64_t power_n_max = 20;
  std::size_t max_witnesses = 10;
};

// Checks items 1..6 exhaustively over the table (any violation is listed);
// items 7..9 are observational and always come back as Reported with their
// measured numbers.
LemmaReport verify_lemmas(const LevelTable& table, std::uint64_t n,
                          const std::vector<int>& ids = {},
                          const LemmaOptions& options = {});

}  // namespace collatz
