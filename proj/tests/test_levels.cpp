#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "collatz/levels.hpp"

using namespace collatz;

namespace {

BuildConfig retained() {
  BuildConfig config;
  config.retain_elements = true;
  return config;
}

}  // namespace

TEST_CASE("SeenSet matches a std::set across the dense/sparse boundary") {
  SeenSet seen(1000);
  std::set<Value> oracle;
  std::mt19937_64 rng(123);
  for (int i = 0; i < 20000; ++i) {
    // Half the draws land below the bit-array cap, half far above it.
    const Value v = (i % 2 == 0) ? 1 + rng() % 1000 : 1001 + rng() % 100000;
    CHECK(seen.contains(v) == (oracle.count(v) != 0));
    CHECK(seen.insert(v) == oracle.insert(v).second);
    CHECK(seen.contains(v));
  }
  CHECK(seen.size() == oracle.size());
}

TEST_CASE("SeenSet with cap zero runs fully sparse") {
  SeenSet seen(0);
  CHECK(seen.insert(1));
  CHECK(seen.insert(UINT64_MAX));
  CHECK_FALSE(seen.insert(1));
  CHECK(seen.size() == 2);
}

TEST_CASE("levels for 1..7 come out exactly as expected") {
  const LevelTable t = build_levels(7, retained());
  CHECK(t.bound() == 7);
  CHECK(t.elements(1) == std::vector<Value>{1});
  CHECK(t.elements(2) == std::vector<Value>{2});
  CHECK(t.elements(3) == std::vector<Value>{3, 10, 5, 16, 8, 4});
  CHECK(t.elements(4).empty());
  CHECK(t.elements(5).empty());
  CHECK(t.elements(6) == std::vector<Value>{6});
  CHECK(t.elements(7) ==
        std::vector<Value>{7, 22, 11, 34, 17, 52, 26, 13, 40, 20});

  CHECK(t.record(1).exit_value == std::nullopt);
  CHECK(t.record(2).exit_value == 1);
  CHECK(t.record(3).exit_value == 2);
  CHECK(t.record(6).exit_value == 3);
  CHECK(t.record(7).exit_value == 10);

  CHECK(t.record(3).ender == 4);
  CHECK(t.record(3).level_max == 16);
  CHECK(t.record(7).ender == 20);
  CHECK(t.record(7).level_max == 52);
  CHECK(t.record(4).e == 0);
  CHECK_FALSE(t.record(4).level_max.has_value());
  CHECK_FALSE(t.record(4).ender.has_value());
  CHECK_FALSE(t.record(4).first_index.has_value());
}

TEST_CASE("visit order for 1..7 is the global append order") {
  const LevelTable t = build_levels(7);
  CHECK(t.visit_index(1) == 0);
  CHECK(t.visit_index(2) == 1);
  CHECK(t.visit_index(3) == 2);
  CHECK(t.visit_index(5) == 4);
  CHECK(t.visit_index(4) == 7);
  CHECK(t.visit_index(6) == 8);
  CHECK(t.visit_index(7) == 9);
  CHECK(t.record(7).first_index == 9);
  CHECK(t.visited_total() == 19);
}

TEST_CASE("new levels appear exactly when the bound crosses them") {
  const LevelTable nine = build_levels(9, retained());
  CHECK(nine.elements(9) == std::vector<Value>{9, 28, 14});
  CHECK(nine.record(9).exit_value == 7);
  const LevelTable twelve = build_levels(12, retained());
  CHECK(twelve.elements(12) == std::vector<Value>{12});
  CHECK(twelve.record(12).exit_value == 6);
  CHECK(twelve.elements(9) == std::vector<Value>{9, 28, 14});
}

TEST_CASE("odd starters can close on an odd ender") {
  const LevelTable t = build_levels(200, retained());
  CHECK(t.elements(81) == std::vector<Value>{81});
  CHECK(t.record(81).exit_value == 244);
  CHECK(t.elements(111) == std::vector<Value>{111});
  CHECK(t.record(111).exit_value == 334);
  CHECK(t.elements(159) ==
        std::vector<Value>{159, 478, 239, 718, 359, 1078, 539, 1618, 809, 2428,
                           1214, 607});
  CHECK(t.record(159).ender == 607);
  CHECK(t.record(159).exit_value == 1822);
}

TEST_CASE("query returns the five classic numbers") {
  const LevelTable t = build_levels(10);
  SUBCASE("a non-starter") {
    const QueryResult r = query(t, 4);
    CHECK(r.touch == 7);
    CHECK(r.level == 3);
    CHECK(r.s == 2);
    CHECK(r.e == 0);
    CHECK(r.max_in_level == 16);
  }
  SUBCASE("the first value") {
    const QueryResult r = query(t, 1);
    CHECK(r.touch == 0);
    CHECK(r.level == 1);
    CHECK(r.s == 0);
    CHECK(r.e == 1);
    CHECK(r.max_in_level == 1);
  }
  SUBCASE("a starter") {
    const QueryResult r = query(t, 7);
    CHECK(r.touch == 9);
    CHECK(r.level == 7);
    CHECK(r.s == 16);
    CHECK(r.e == 10);
    CHECK(r.max_in_level == 52);
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(query(t, 0), OutOfRangeError);
    CHECK_THROWS_AS(query(t, 11), OutOfRangeError);
  }
}

TEST_CASE("maximal_of tracks the running peak") {
  const LevelTable t = build_levels(20);
  CHECK(maximal_of(t, 1) == 1);
  CHECK(maximal_of(t, 2) == 2);
  CHECK(maximal_of(t, 3) == 16);
  CHECK(maximal_of(t, 7) == 52);
  CHECK(maximal_of(t, 9) == 52);
  CHECK(maximal_of(t, 15) == 160);
  CHECK(maximal_of(t, 20) == 160);
  for (std::uint64_t n = 2; n <= 20; ++n)
    CHECK(maximal_of(t, n) >= maximal_of(t, n - 1));
  CHECK_THROWS_AS(maximal_of(t, 0), OutOfRangeError);
  CHECK_THROWS_AS(maximal_of(t, 21), OutOfRangeError);
}

TEST_CASE("element access requires a retained build") {
  const LevelTable streaming = build_levels(50);
  CHECK_THROWS_AS(level_elements(streaming, 3), NotRetainedError);
  const LevelTable kept = build_levels(50, retained());
  CHECK(level_elements(kept, 3) == std::vector<Value>{3, 10, 5, 16, 8, 4});
  CHECK(level_elements(kept, 4).empty());
}

TEST_CASE("the levels partition 1..N with no repeats") {
  const std::uint64_t n = 10000;
  const LevelTable t = build_levels(n, retained());
  std::vector<int> hits(n + 1, 0);
  std::set<Value> all;
  std::uint64_t total = 0;
  for (std::uint64_t x = 1; x <= n; ++x) {
    for (Value v : t.elements(x)) {
      CHECK(all.insert(v).second);  // never appended twice anywhere
      if (v <= n) ++hits[v];
      ++total;
    }
  }
  for (std::uint64_t v = 1; v <= n; ++v) CHECK(hits[v] == 1);
  CHECK(total == t.visited_total());
  CHECK(total == all.size());
}

TEST_CASE("structural facts about starters and members") {
  const std::uint64_t n = 10000;
  const LevelTable t = build_levels(n, retained());
  for (std::uint64_t x = 1; x <= n; ++x) {
    const std::uint64_t e = t.element_count(x);
    // The owning level never lies above the value itself.
    CHECK(t.level_of(x) <= x);
    CHECK(t.element_count(t.level_of(x)) >= 1);
    if (e >= 2) CHECK((x & 1) == 1);      // long levels start odd
    if (x % 2 == 0) CHECK(e <= 1);        // even starters stop immediately
    if (e >= 1) {
      const auto& elems = t.elements(x);
      for (std::size_t i = 1; i < elems.size(); ++i)
        CHECK(elems[i] > x);              // later members exceed the starter
    }
  }
}

TEST_CASE("records are coherent with the map") {
  const LevelTable t = build_levels(1000, retained());
  for (std::uint64_t x = 1; x <= 1000; ++x) {
    const LevelRecord rec = t.record(x);
    if (rec.e == 0) continue;
    const auto& elems = t.elements(x);
    CHECK(elems.size() == rec.e);
    CHECK(elems.front() == x);
    CHECK(elems.back() == *rec.ender);
    Value peak = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] > peak) peak = elems[i];
      if (i + 1 < elems.size()) CHECK(f_step(elems[i]) == elems[i + 1]);
    }
    CHECK(peak == *rec.level_max);
    if (*rec.ender == 1)
      CHECK_FALSE(rec.exit_value.has_value());
    else
      CHECK(f_step(*rec.ender) == *rec.exit_value);
  }
}

TEST_CASE("visit indices replay the global append order") {
  const LevelTable t = build_levels(1000, retained());
  std::uint64_t running = 0;
  std::set<std::uint64_t> seen_indices;
  for (std::uint64_t x = 1; x <= 1000; ++x) {
    for (Value v : t.elements(x)) {
      if (v <= 1000) {
        CHECK(t.visit_index(v) == running);
        CHECK(seen_indices.insert(running).second);
      }
      ++running;
    }
  }
  CHECK(running == t.visited_total());
}

TEST_CASE("a too-small budget aborts, a sufficient one succeeds") {
  BuildConfig tight = retained();
  tight.budget = 94;  // the level of 27 holds 95 elements
  CHECK_THROWS_AS(build_levels(27, tight), BudgetExceededError);
  tight.budget = 95;
  const LevelTable t = build_levels(27, tight);
  CHECK(t.element_count(27) == 95);
  CHECK(t.record(27).ender == 92);
  CHECK(t.record(27).exit_value == 46);
  CHECK(t.record(27).level_max == 9232);
}

TEST_CASE("a tiny dense cap changes nothing but storage") {
  BuildConfig sparse_only;
  sparse_only.dense_cap = 1;
  const LevelTable a = build_levels(300, sparse_only);
  const LevelTable b = build_levels(300);
  for (std::uint64_t x = 1; x <= 300; ++x) {
    CHECK(a.element_count(x) == b.element_count(x));
    CHECK(a.level_of(x) == b.level_of(x));
    CHECK(a.visit_index(x) == b.visit_index(x));
    CHECK(a.max_seen_up_to(x) == b.max_seen_up_to(x));
  }
}

TEST_CASE("bad build arguments are rejected") {
  CHECK_THROWS_AS(build_levels(0), OutOfRangeError);
  BuildConfig zero_budget;
  zero_budget.budget = 0;
  CHECK_THROWS_AS(build_levels(10, zero_budget), OutOfRangeError);
}
