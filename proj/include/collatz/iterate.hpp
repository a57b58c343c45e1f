#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "collatz/errors.hpp"

namespace collatz {

using Value = std::uint64_t;

// Default cap on map applications per orbit and elements per level.
inline constexpr std::uint64_t kDefaultBudget = 100000;

// Largest v for which 3v+1 still fits in 64 bits.
inline constexpr Value kMaxOddInput = (UINT64_MAX - 1) / 3;

// One application of the map: 3v+1 for odd v, v/2 for even v.
// Rejects v = 0; throws OverflowError when 3v+1 would wrap.
Value f_step(Value v);

struct OddStep {
  Value next = 0;        // (3v+1) / 2^exponent, odd
  std::uint32_t exponent = 0;  // exact power of two dividing 3v+1
};

// Odd-to-odd step: strips the full power of two from 3v+1.
// Requires odd v >= 1; throws NotOddError / OutOfRangeError / OverflowError.
OddStep odd_step(Value v);

// Full orbit from start down to 1, inclusive of both ends.
// budget caps map applications; length is at most budget + 1.
std::vector<Value> trajectory(Value start, std::uint64_t budget = kDefaultBudget);

// Shared memo for stopping steps: concurrent readers, serialized insertion,
// append-only, never beyond max_entries.
class StoppingCache {
public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 22;

  explicit StoppingCache(std::size_t max_entries = kDefaultCapacity);

  std::optional<std::uint64_t> lookup(Value v) const;
  // Inserts unless full or already present; returns true when stored.
  bool store(Value v, std::uint64_t steps);
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Value, std::uint64_t> entries_;
};

// Number of map applications from v to 1; equals trajectory length minus one.
// The cache shortcuts work but never changes the result. budget caps the
// applications actually performed on this call.
std::uint64_t stopping_steps(Value v, StoppingCache& cache,
                             std::uint64_t budget = kDefaultBudget);

// Same, with a private single-use cache.
std::uint64_t stopping_steps(Value v, std::uint64_t budget = kDefaultBudget);

}  // namespace collatz
