#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "collatz/errors.hpp"
#include "collatz/iterate.hpp"

namespace collatz {

// Membership set for the level construction: a bit array for values up to
// dense_cap, a hash set above it. Values are >= 1.
class SeenSet {
public:
  explicit SeenSet(std::uint64_t dense_cap);

  bool contains(Value v) const;
  // Returns true when v was newly added.
  bool insert(Value v);
  std::uint64_t size() const { return count_; }
  std::uint64_t dense_cap() const { return dense_cap_; }

private:
  std::uint64_t dense_cap_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Value> sparse_;
  std::uint64_t count_ = 0;
};

struct BuildConfig {
  std::uint64_t dense_cap = 0;  // 0 picks 8 * bound
  std::uint64_t budget = kDefaultBudget;  // max elements in one level
  bool retain_elements = false;
};

// One level, assembled from the table columns. Fields past `e` are absent
// when e = 0; exit_value is also absent when the level ends at 1.
struct LevelRecord {
  Value starter = 0;
  std::uint64_t e = 0;
  std::optional<Value> level_max;
  std::optional<Value> ender;
  std::optional<Value> exit_value;
  std::optional<std::uint64_t> first_index;
};

// Raw columns for rebuilding a table from an export. Absent values are 0.
struct LevelTableData {
  std::uint64_t bound = 0;
  bool retained = false;
  std::vector<std::uint32_t> e;            // size bound + 1, index 0 unused
  std::vector<std::uint32_t> level_of;
  std::vector<std::uint64_t> visit_index;
  std::vector<Value> level_max;
  std::vector<Value> ender;
  std::vector<Value> exit_value;
  std::vector<std::vector<Value>> elements;  // only when retained
};

// Columnar store covering 1..bound: element count, owning level, global visit
// order, per-level max / ender / exit, plus prefix sums for cum_e and the
// running max. Element lists are kept only when built with retain_elements.
class LevelTable {
public:
  std::uint64_t bound() const { return bound_; }
  bool retained() const { return retained_; }

  std::uint64_t element_count(Value x) const;       // e(x)
  Value level_of(Value x) const;                    // starter of the level containing x
  std::uint64_t visit_index(Value x) const;         // 0-based global append order
  LevelRecord record(Value x) const;
  std::uint64_t cum_e(std::uint64_t n) const;       // sum of e(1..n)
  Value max_seen_up_to(std::uint64_t n) const;      // max level_max over 1..n
  std::uint64_t visited_total() const { return cum_e(bound_); }
  const std::vector<Value>& elements(Value x) const;  // throws NotRetainedError

  // Rebuilds a table from columns (used by importers); recomputes the prefix
  // columns and validates that every value belongs to a level.
  static LevelTable restore(LevelTableData&& data);

private:
  void check_range(Value x) const;

  std::uint64_t bound_ = 0;
  bool retained_ = false;
  std::vector<std::uint32_t> e_;
  std::vector<std::uint32_t> level_of_;
  std::vector<std::uint64_t> visit_index_;
  std::vector<Value> level_max_;
  std::vector<Value> ender_;
  std::vector<Value> exit_;
  std::vector<std::uint64_t> cum_e_;
  std::vector<Value> max_prefix_;
  std::vector<std::vector<Value>> elements_;

  friend LevelTable build_levels(std::uint64_t, const BuildConfig&);
};

// Builds the level decomposition of 1..n: scan x ascending, skip values
// already seen, otherwise follow the map from x, appending and marking each
// value, and stop after appending v when v = 1 or f(v) is already seen
// (f(v) is then the exit value, not an element).
LevelTable build_levels(std::uint64_t n, const BuildConfig& config = {});

struct QueryResult {
  std::uint64_t touch = 0;   // global visit index
  Value level = 0;           // starter of the containing level
  std::uint64_t s = 0;       // map applications down to 1
  std::uint64_t e = 0;       // element count of x's own level
  Value max_in_level = 0;    // max of the containing level
};

QueryResult query(const LevelTable& table, Value x, StoppingCache& cache);
QueryResult query(const LevelTable& table, Value x);

// Largest value appended by levels 1..n.
Value maximal_of(const LevelTable& table, std::uint64_t n);

// Elements of the level starting at x (empty when x is not a starter).
const std::vector<Value>& level_elements(const LevelTable& table, Value x);

}  // namespace collatz
