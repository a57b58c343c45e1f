#include "collatz/iterate.hpp"

#include <mutex>
#include <utility>

namespace collatz {

Value f_step(Value v) {
  if (v == 0) throw OutOfRangeError("f_step: value must be >= 1");
  if (v & 1) {
    if (v > kMaxOddInput) throw OverflowError(v);
    return 3 * v + 1;
  }
  return v >> 1;
}

OddStep odd_step(Value v) {
  if (v == 0) throw OutOfRangeError("odd_step: value must be >= 1");
  if ((v & 1) == 0) throw NotOddError(v);
  if (v > kMaxOddInput) throw OverflowError(v);
  Value t = 3 * v + 1;
  std::uint32_t k = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++k;
  }
  return OddStep{t, k};
}

std::vector<Value> trajectory(Value start, std::uint64_t budget) {
  if (start == 0) throw OutOfRangeError("trajectory: start must be >= 1");
  std::vector<Value> path;
  path.push_back(start);
  Value v = start;
  std::uint64_t applied = 0;
  while (v != 1) {
    if (applied == budget) throw BudgetExceededError(start, budget);
    v = f_step(v);
    ++applied;
    path.push_back(v);
  }
  return path;
}

StoppingCache::StoppingCache(std::size_t max_entries) : capacity_(max_entries) {}

std::optional<std::uint64_t> StoppingCache::lookup(Value v) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(v);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool StoppingCache::store(Value v, std::uint64_t steps) {
  std::unique_lock lock(mutex_);
  if (entries_.size() >= capacity_) return false;
  return entries_.emplace(v, steps).second;
}

std::size_t StoppingCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::uint64_t stopping_steps(Value v, StoppingCache& cache, std::uint64_t budget) {
  if (v == 0) throw OutOfRangeError("stopping_steps: value must be >= 1");
  // Walk until 1 or a cache hit, then backfill the path.
  std::vector<std::pair<Value, std::uint64_t>> path;  // (value, steps walked so far)
  Value cur = v;
  std::uint64_t walked = 0;
  std::uint64_t total;
  for (;;) {
    if (auto hit = cache.lookup(cur)) {
      total = walked + *hit;
      break;
    }
    if (cur == 1) {
      total = walked;
      break;
    }
    path.emplace_back(cur, walked);
    if (walked == budget) throw BudgetExceededError(v, budget);
    cur = f_step(cur);
    ++walked;
  }
  for (const auto& [value, at] : path) cache.store(value, total - at);
  cache.store(1, 0);
  return total;
}

std::uint64_t stopping_steps(Value v, std::uint64_t budget) {
  StoppingCache local(64);
  return stopping_steps(v, local, budget);
}

}  // namespace collatz
