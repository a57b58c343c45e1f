#include "collatz/cycles.hpp"

#include <unordered_set>

namespace collatz {

namespace {

constexpr unsigned __int128 make_u128(std::uint64_t hi, std::uint64_t lo) {
  return (static_cast<unsigned __int128>(hi) << 64) | lo;
}

// Fractions scaled by 2^96, rounded down. For n < 2^31 the products stay
// within 128 bits and the window n * 2^-96 is far below the closest approach
// of these multiples to an integer, so the floors below are exact.
constexpr unsigned __int128 kLog2Of3 =
    make_u128(0x0000000195c01a39ull, 0xfbd6879fa00b120aull);  // log2(3) * 2^96
constexpr unsigned __int128 kLog6Of2 =
    make_u128(0x000000006308c91bull, 0x702a7cf4ff85a5c1ull);  // log6(2) * 2^96
constexpr unsigned __int128 kLog6Of3 =
    make_u128(0x000000009cf736e4ull, 0x8fd5830b007a5a3eull);  // log6(3) * 2^96

std::uint64_t floor_scaled(std::uint64_t n, unsigned __int128 fraction) {
  return static_cast<std::uint64_t>((n * fraction) >> 96);
}

}  // namespace

ParityCase classify_parity(const ParityQuad& quad) {
  using enum Parity;
  struct Row {
    ParityQuad quad;
    int id;
    bool refuted;
    const char* reason;
  };
  // (before_entry, entry, before_close, close); all other patterns cannot
  // occur in a walk that revisits its entry point.
  static constexpr Row kRows[] = {
      {{Odd, Even, Even, Even}, 1, false, "survives: even/2 = 3*odd + 1"},
      {{Odd, Even, Odd, Even}, 2, true, "both predecessors coincide (d = e)"},
      {{Even, Even, Even, Even}, 3, true, "both predecessors coincide (d = e)"},
      {{Even, Even, Odd, Even}, 4, false, "survives: odd tripled meets even halved"},
      {{Even, Odd, Even, Odd}, 5, true, "both predecessors coincide (d = e)"},
  };
  ParityCase result;
  result.parities = quad;
  for (const Row& row : kRows) {
    if (row.quad == quad) {
      result.possibility_id = row.id;
      result.refuted = row.refuted;
      result.reason = row.reason;
      return result;
    }
  }
  result.reason = "unreachable parity pattern";
  return result;
}

bool is_cyclic_pair(Value odd_value, Value even_value) {
  if (odd_value == 0 || (odd_value & 1) == 0)
    throw ParityError("is_cyclic_pair: first argument must be odd");
  if (even_value == 0 || (even_value & 1) != 0)
    throw ParityError("is_cyclic_pair: second argument must be even");
  if (odd_value > kMaxOddInput) throw OverflowError(odd_value);
  return 3 * odd_value + 1 == even_value / 2;
}

std::vector<CyclicPairHit> search_cyclic_pairs(const LevelTable& table,
                                               std::uint64_t n) {
  if (n == 0 || n > table.bound())
    throw OutOfRangeError("search_cyclic_pairs: bound outside 1.." +
                          std::to_string(table.bound()));
  if (!table.retained())
    throw NotRetainedError("search_cyclic_pairs needs retained element lists");

  std::vector<CyclicPairHit> hits;
  std::unordered_set<Value> members;
  for (std::uint64_t x = 1; x <= n; ++x) {
    const auto& elems = table.elements(x);
    if (elems.size() < 2) continue;
    members.clear();
    members.insert(elems.begin(), elems.end());
    for (Value v : elems) {
      if ((v & 1) == 0) continue;
      // 3v+1 = even/2 means even = 6v+2.
      if (v > (UINT64_MAX - 2) / 6) continue;
      const Value partner = 6 * v + 2;
      if (members.count(partner)) hits.push_back({x, v, partner});
    }
  }
  return hits;
}

std::uint64_t cycle_divisor_bound(std::uint64_t n_odd) {
  if (n_odd == 0 || n_odd > kMaxCycleInput)
    throw OutOfRangeError("cycle_divisor_bound: n_odd outside 1.." +
                          std::to_string(kMaxCycleInput));
  return floor_scaled(n_odd, kLog2Of3) + 1;
}

PqBounds pq_bounds(std::uint64_t e_m) {
  if (e_m < 2 || e_m > kMaxCycleInput)
    throw OutOfRangeError("pq_bounds: level size outside 2.." +
                          std::to_string(kMaxCycleInput));
  PqBounds b;
  b.p_max = floor_scaled(e_m, kLog6Of2);
  b.q_min = floor_scaled(e_m, kLog6Of3) + 1;
  return b;
}

CycleBoundReport cycle_bound_report(std::uint64_t n_odd,
                                    std::optional<std::uint64_t> e_m) {
  CycleBoundReport report;
  report.n_odd = n_odd;
  report.sum_k_min = cycle_divisor_bound(n_odd);
  if (e_m) {
    const PqBounds b = pq_bounds(*e_m);
    report.e_m = *e_m;
    report.p_max = b.p_max;
    report.q_min = b.q_min;
  }
  return report;
}

}  // namespace collatz
