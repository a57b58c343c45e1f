#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz/levels.hpp"

namespace collatz {

enum class Parity { Odd, Even };

// Parities at the four decisive positions of a hypothetical cycle inside a
// level: the entry point (reached once in the middle of the walk and again
// at the close) and the predecessor on each arrival.
struct ParityQuad {
  Parity before_entry = Parity::Odd;
  Parity entry = Parity::Odd;
  Parity before_close = Parity::Odd;
  Parity close = Parity::Odd;

  bool operator==(const ParityQuad&) const = default;
};

struct ParityCase {
  ParityQuad parities;
  std::optional<int> possibility_id;  // 1..5, empty for unreachable patterns
  bool refuted = false;
  std::string reason;
};

// Classifies one of the 16 parity patterns: exactly five are reachable;
// three of those collapse because both predecessors coincide, and the two
// survivors force the cyclic-pair relation between an odd and an even value.
ParityCase classify_parity(const ParityQuad& quad);

// The surviving relation: 3 * odd + 1 = even / 2. Throws ParityError when
// the arguments do not have the stated parities.
bool is_cyclic_pair(Value odd_value, Value even_value);

struct CyclicPairHit {
  Value level = 0;
  Value odd_member = 0;
  Value even_member = 0;
};

// Scans every retained level for member pairs satisfying the relation.
std::vector<CyclicPairHit> search_cyclic_pairs(const LevelTable& table,
                                               std::uint64_t n);

// Inputs above this limit would overflow the fixed-point products below.
inline constexpr std::uint64_t kMaxCycleInput = std::uint64_t{1} << 31;

// Least integer strictly above n_odd * log2(3): a cycle through n_odd odd
// values must strip at least this many factors of two in total.
std::uint64_t cycle_divisor_bound(std::uint64_t n_odd);

struct PqBounds {
  std::uint64_t p_max = 0;  // odd positions: greatest integer below e_m / (1 + log2(3))
  std::uint64_t q_min = 0;  // even positions: least integer above e_m * log6(3)
};

// Splits a cycle-carrying level of e_m elements into odd/even position
// counts p + q = e_m; requires e_m >= 2.
PqBounds pq_bounds(std::uint64_t e_m);

struct CycleBoundReport {
  std::uint64_t n_odd = 0;
  std::uint64_t sum_k_min = 0;
  std::optional<std::uint64_t> e_m;
  std::optional<std::uint64_t> p_max;
  std::optional<std::uint64_t> q_min;
};

// Bundles both bounds for the CLI: n_odd drives sum_k_min; the optional
// level size adds the p/q split.
CycleBoundReport cycle_bound_report(std::uint64_t n_odd,
                                    std::optional<std::uint64_t> e_m);

}  // namespace collatz
