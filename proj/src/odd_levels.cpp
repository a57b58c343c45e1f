#include "collatz/odd_levels.hpp"

#include <limits>

namespace collatz {

const OddLevelRecord& OddLevelTable::record(Value x) const {
  if (x == 0 || x > bound)
    throw OutOfRangeError("record: " + std::to_string(x) + " outside 1.." +
                          std::to_string(bound));
  return records[x];
}

std::vector<Value> filter_odds(std::span<const Value> elements) {
  std::vector<Value> odds;
  for (Value v : elements)
    if (v & 1) odds.push_back(v);
  return odds;
}

OddLevelTable build_collatz3_direct(std::uint64_t n, const BuildConfig& config) {
  if (n == 0) throw OutOfRangeError("build_collatz3_direct: bound must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw OutOfRangeError("build_collatz3_direct: bound exceeds 2^32 - 1");
  if (config.budget == 0)
    throw OutOfRangeError("build_collatz3_direct: budget must be >= 1");

  OddLevelTable t;
  t.bound = n;
  t.records.resize(static_cast<std::size_t>(n) + 1);
  SeenSet seen(config.dense_cap ? config.dense_cap : 8 * n);

  for (std::uint64_t x = 1; x <= n; ++x) {
    auto& rec = t.records[x];
    rec.starter = x;
    if (seen.contains(x)) continue;

    std::uint64_t count = 0;
    const auto bump = [&] {
      ++count;
      if (count > config.budget) throw BudgetExceededError(x, config.budget);
    };

    Value v = x;
    for (;;) {
      if ((v & 1) == 0) {
        // Even value entering the level; only the starter can arrive here.
        seen.insert(v);
        ++rec.even_count;
        bump();
        const Value half = v >> 1;
        if (seen.contains(half)) {
          rec.exit_value = half;
          break;
        }
        v = half;
        continue;
      }
      seen.insert(v);
      rec.odds.push_back(v);
      bump();
      if (v == 1) break;
      const OddStep step = odd_step(v);
      rec.k_list.push_back(step.exponent);
      // Replay the halving run one value at a time, as the full walk would.
      const Value tripled = 3 * v + 1;
      bool stopped = false;
      for (std::uint32_t j = 0; j < step.exponent; ++j) {
        const Value even = tripled >> j;
        if (seen.contains(even)) {
          rec.exit_value = even;
          stopped = true;
          break;
        }
        seen.insert(even);
        ++rec.even_count;
        bump();
      }
      if (stopped) break;
      if (seen.contains(step.next)) {
        rec.exit_value = step.next;
        break;
      }
      v = step.next;
    }
  }
  return t;
}

EquivalenceReport check_equivalence(const LevelTable& table, std::uint64_t n) {
  if (n == 0 || n > table.bound())
    throw OutOfRangeError("check_equivalence: bound outside 1.." +
                          std::to_string(table.bound()));
  if (!table.retained())
    throw NotRetainedError("check_equivalence needs retained element lists");

  BuildConfig config;
  config.budget = std::numeric_limits<std::uint32_t>::max();
  const OddLevelTable direct = build_collatz3_direct(n, config);

  EquivalenceReport report;
  report.levels_checked = n;
  for (std::uint64_t x = 1; x <= n; ++x) {
    const auto& rec = direct.records[x];
    const std::vector<Value> odds = filter_odds(table.elements(x));
    const bool counts_match =
        rec.odds.size() + rec.even_count == table.element_count(x);
    if (odds != rec.odds || !counts_match) {
      report.agree = false;
      report.first_mismatch = x;
      break;
    }
  }
  return report;
}

}  // namespace collatz
