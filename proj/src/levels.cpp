#include "collatz/levels.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace collatz {

// ----- SeenSet -----

SeenSet::SeenSet(std::uint64_t dense_cap)
    : dense_cap_(dense_cap), bits_(dense_cap / 64 + 1, 0) {}

bool SeenSet::contains(Value v) const {
  assert(v >= 1);
  if (v <= dense_cap_) return (bits_[v >> 6] >> (v & 63)) & 1u;
  return sparse_.count(v) != 0;
}

bool SeenSet::insert(Value v) {
  assert(v >= 1);
  if (v <= dense_cap_) {
    std::uint64_t& word = bits_[v >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (word & mask) return false;
    word |= mask;
    ++count_;
    return true;
  }
  const bool added = sparse_.insert(v).second;
  if (added) ++count_;
  return added;
}

// ----- LevelTable -----

void LevelTable::check_range(Value x) const {
  if (x == 0 || x > bound_)
    throw OutOfRangeError("value " + std::to_string(x) + " outside 1.." +
                          std::to_string(bound_));
}

std::uint64_t LevelTable::element_count(Value x) const {
  check_range(x);
  return e_[x];
}

Value LevelTable::level_of(Value x) const {
  check_range(x);
  return level_of_[x];
}

std::uint64_t LevelTable::visit_index(Value x) const {
  check_range(x);
  return visit_index_[x];
}

LevelRecord LevelTable::record(Value x) const {
  check_range(x);
  LevelRecord r;
  r.starter = x;
  r.e = e_[x];
  if (r.e > 0) {
    r.level_max = level_max_[x];
    r.ender = ender_[x];
    if (exit_[x] != 0) r.exit_value = exit_[x];
    r.first_index = visit_index_[x];
  }
  return r;
}

std::uint64_t LevelTable::cum_e(std::uint64_t n) const {
  check_range(n);
  return cum_e_[n];
}

Value LevelTable::max_seen_up_to(std::uint64_t n) const {
  check_range(n);
  return max_prefix_[n];
}

const std::vector<Value>& LevelTable::elements(Value x) const {
  check_range(x);
  if (!retained_)
    throw NotRetainedError("element lists were not kept; build with retain_elements");
  return elements_[x];
}

LevelTable LevelTable::restore(LevelTableData&& data) {
  const std::uint64_t n = data.bound;
  if (n == 0) throw OutOfRangeError("restore: bound must be >= 1");
  LevelTable t;
  t.bound_ = n;
  t.retained_ = data.retained;
  t.e_ = std::move(data.e);
  t.level_of_ = std::move(data.level_of);
  t.visit_index_ = std::move(data.visit_index);
  t.level_max_ = std::move(data.level_max);
  t.ender_ = std::move(data.ender);
  t.exit_ = std::move(data.exit_value);
  t.elements_ = std::move(data.elements);
  const std::size_t want = static_cast<std::size_t>(n) + 1;
  if (t.e_.size() != want || t.level_of_.size() != want ||
      t.visit_index_.size() != want || t.level_max_.size() != want ||
      t.ender_.size() != want || t.exit_.size() != want ||
      (t.retained_ && t.elements_.size() != want))
    throw OutOfRangeError("restore: column sizes do not match bound");
  t.cum_e_.assign(want, 0);
  t.max_prefix_.assign(want, 0);
  for (std::uint64_t x = 1; x <= n; ++x) {
    const Value owner = t.level_of_[x];
    if (owner == 0 || owner > x || t.e_[owner] == 0)
      throw OutOfRangeError("restore: value " + std::to_string(x) +
                            " is not covered by a level");
    t.cum_e_[x] = t.cum_e_[x - 1] + t.e_[x];
    t.max_prefix_[x] = std::max(t.max_prefix_[x - 1], t.level_max_[x]);
  }
  return t;
}

LevelTable build_levels(std::uint64_t n, const BuildConfig& config) {
  if (n == 0) throw OutOfRangeError("build_levels: bound must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw OutOfRangeError("build_levels: bound exceeds 2^32 - 1");
  if (config.budget == 0 ||
      config.budget > std::numeric_limits<std::uint32_t>::max())
    throw OutOfRangeError("build_levels: budget must be in 1..2^32 - 1");

  LevelTable t;
  t.bound_ = n;
  t.retained_ = config.retain_elements;
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  t.e_.assign(size, 0);
  t.level_of_.assign(size, 0);
  t.visit_index_.assign(size, 0);
  t.level_max_.assign(size, 0);
  t.ender_.assign(size, 0);
  t.exit_.assign(size, 0);
  t.cum_e_.assign(size, 0);
  t.max_prefix_.assign(size, 0);
  if (config.retain_elements) t.elements_.resize(size);

  SeenSet seen(config.dense_cap ? config.dense_cap : 8 * n);
  std::uint64_t next_index = 0;

  for (std::uint64_t x = 1; x <= n; ++x) {
    if (!seen.contains(x)) {
      std::uint64_t count = 0;
      Value level_max = 0;
      Value v = x;
      for (;;) {
        seen.insert(v);
        if (v <= n) {
          t.level_of_[v] = static_cast<std::uint32_t>(x);
          t.visit_index_[v] = next_index;
        }
        ++next_index;
        ++count;
        if (count > config.budget) throw BudgetExceededError(x, config.budget);
        if (v > level_max) level_max = v;
        if (config.retain_elements) t.elements_[x].push_back(v);
        if (v == 1) {
          t.ender_[x] = 1;  // exit stays absent: the level closed at 1
          break;
        }
        const Value next = f_step(v);
        if (seen.contains(next)) {
          t.ender_[x] = v;
          t.exit_[x] = next;
          break;
        }
        v = next;
      }
      t.e_[x] = static_cast<std::uint32_t>(count);
      t.level_max_[x] = level_max;
    }
    t.cum_e_[x] = t.cum_e_[x - 1] + t.e_[x];
    t.max_prefix_[x] = std::max(t.max_prefix_[x - 1], t.level_max_[x]);
  }
  return t;
}

QueryResult query(const LevelTable& table, Value x, StoppingCache& cache) {
  if (x == 0 || x > table.bound())
    throw OutOfRangeError("query: " + std::to_string(x) + " outside 1.." +
                          std::to_string(table.bound()));
  QueryResult r;
  r.touch = table.visit_index(x);
  r.level = table.level_of(x);
  r.s = stopping_steps(x, cache);
  r.e = table.element_count(x);
  r.max_in_level = *table.record(r.level).level_max;
  return r;
}

QueryResult query(const LevelTable& table, Value x) {
  StoppingCache local(256);
  return query(table, x, local);
}

Value maximal_of(const LevelTable& table, std::uint64_t n) {
  return table.max_seen_up_to(n);
}

const std::vector<Value>& level_elements(const LevelTable& table, Value x) {
  return table.elements(x);
}

}  // namespace collatz
