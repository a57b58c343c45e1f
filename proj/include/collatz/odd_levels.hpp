#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "collatz/errors.hpp"
#include "collatz/levels.hpp"

namespace collatz {

// Odd-compressed view of one level: the odd elements in visit order, the
// power of two stripped after each odd (the last odd included, unless it
// is 1), and how many even elements the full level interleaved.
struct OddLevelRecord {
  Value starter = 0;
  std::vector<Value> odds;
  std::vector<std::uint32_t> k_list;
  std::uint64_t even_count = 0;
  std::optional<Value> exit_value;
};

struct OddLevelTable {
  std::uint64_t bound = 0;
  std::vector<OddLevelRecord> records;  // index 0 unused

  const OddLevelRecord& record(Value x) const;
};

// Odd members of an element list, order preserved.
std::vector<Value> filter_odds(std::span<const Value> elements);

// Builds the odd-compressed decomposition directly with the odd-to-odd map,
// replaying the even values between odds against the seen set so the walk
// stops exactly where the full construction does.
OddLevelTable build_collatz3_direct(std::uint64_t n, const BuildConfig& config = {});

struct EquivalenceReport {
  bool agree = true;
  std::optional<Value> first_mismatch;
  std::uint64_t levels_checked = 0;
};

// Compares filter_odds of each retained level against the direct build,
// including the odd + even = e element accounting.
EquivalenceReport check_equivalence(const LevelTable& table, std::uint64_t n);

}  // namespace collatz
