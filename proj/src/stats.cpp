#include "collatz/stats.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace collatz {

int lambda_of(const LevelTable& table, Value m) {
  return table.element_count(m) > 0 ? 1 : 0;
}

StatsSeries stats_series(const LevelTable& table,
                         const std::vector<std::uint64_t>& checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0 || checkpoints[i] > table.bound())
      throw OutOfRangeError("stats_series: checkpoint outside 1.." +
                            std::to_string(table.bound()));
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw OutOfRangeError("stats_series: checkpoints must be strictly increasing");
  }
  StatsSeries series;
  if (checkpoints.empty()) return series;
  std::uint64_t nz = 0;
  std::uint64_t starter_sum = 0;
  std::size_t next = 0;
  for (std::uint64_t i = 1; i <= checkpoints.back(); ++i) {
    if (table.element_count(i) > 0) {
      ++nz;
      starter_sum += i;
    }
    if (i == checkpoints[next]) {
      StatsRow row;
      row.n = i;
      row.nz = nz;
      row.z = i - nz;
      row.cum_e = table.cum_e(i);
      row.maximal = table.max_seen_up_to(i);
      row.starter_sum = starter_sum;
      series.rows.push_back(row);
      ++next;
    }
  }
  return series;
}

bool LemmaReport::verified_ok() const {
  for (const auto& entry : entries)
    if (entry.status == LemmaStatus::Verified && !entry.violations.empty())
      return false;
  return true;
}

namespace {

void add_witness(LemmaEntry& entry, const LemmaOptions& options,
                 const std::string& text) {
  if (entry.violations.size() < options.max_witnesses)
    entry.violations.push_back(text);
}

// Item 1: a level seen before its own index stays empty.
LemmaEntry check_owned_or_empty(const LevelTable& t, std::uint64_t n,
                                const LemmaOptions& options) {
  LemmaEntry entry;
  entry.id = 1;
  for (std::uint64_t x = 1; x <= n; ++x) {
    ++entry.checked;
    if (t.level_of(x) < x && t.element_count(x) != 0)
      add_witness(entry, options,
                  "n=" + std::to_string(x) +
                      " level=" + std::to_string(t.level_of(x)) +
                      " e=" + std::to_string(t.element_count(x)));
  }
  entry.note = "level(n) < n forces e(n) = 0";
  return entry;
}

// Item 2: a non-empty level is its own starter.
LemmaEntry check_nonempty_is_starter(const LevelTable& t, std::uint64_t n,
                                     const LemmaOptions& options) {
  LemmaEntry entry;
  entry.id = 2;
  for (std::uint64_t x = 1; x <= n; ++x) {
    ++entry.checked;
    if (t.element_count(x) != 0 && t.level_of(x) != x)
      add_witness(entry, options,
                  "n=" + std::to_string(x) +
                      " level=" + std::to_string(t.level_of(x)));
  }
  entry.note = "e(n) > 0 forces level(n) = n";
  return entry;
}

// Item 3: element count equals the drop in stopping steps across the level.
LemmaEntry check_count_matches_steps(const LevelTable& t, std::uint64_t n,
                                     const LemmaOptions& options,
                                     StoppingCache& cache) {
  LemmaEntry entry;
  entry.id = 3;
  for (std::uint64_t x = 2; x <= n; ++x) {
    const LevelRecord rec = t.record(x);
    if (rec.e == 0 || !rec.exit_value) continue;
    ++entry.checked;
    const std::uint64_t drop =
        stopping_steps(x, cache) - stopping_steps(*rec.exit_value, cache);
    if (rec.e != drop)
      add_witness(entry, options,
                  "x=" + std::to_string(x) + " e=" + std::to_string(rec.e) +
                      " s-drop=" + std::to_string(drop));
  }
  entry.note = "e(x) = s(x) - s(exit(x)) for every exiting level";
  return entry;
}

// Item 4: stopping steps decrease by exactly one along the map.
LemmaEntry check_steps_decrease(const LevelTable&, std::uint64_t n,
                                const LemmaOptions& options,
                                StoppingCache& cache) {
  LemmaEntry entry;
  entry.id = 4;
  for (std::uint64_t v = 2; v <= n; ++v) {
    ++entry.checked;
    if (stopping_steps(v, cache) != stopping_steps(f_step(v), cache) + 1)
      add_witness(entry, options, "v=" + std::to_string(v));
  }
  entry.note = "s(v) = s(f(v)) + 1 for v >= 2";
  return entry;
}

// Item 5: non-starter members of a level have empty levels of their own.
LemmaEntry check_members_empty(const LevelTable& t, std::uint64_t n,
                               const LemmaOptions& options) {
  LemmaEntry entry;
  entry.id = 5;
  for (std::uint64_t y = 1; y <= n; ++y) {
    ++entry.checked;
    if (t.level_of(y) != y && t.element_count(y) != 0)
      add_witness(entry, options,
                  "y=" + std::to_string(y) +
                      " level=" + std::to_string(t.level_of(y)) +
                      " e=" + std::to_string(t.element_count(y)));
  }
  entry.note = "members of another level start nothing themselves";
  return entry;
}

// Item 6: a power of two in front shifts stopping steps by its exponent.
LemmaEntry check_power_shift(const LevelTable&, std::uint64_t,
                             const LemmaOptions& options, StoppingCache& cache) {
  LemmaEntry entry;
  entry.id = 6;
  for (std::uint64_t k = 1; k <= options.power_k_max; ++k) {
    const std::uint64_t base = stopping_steps(k, cache);
    for (std::uint64_t p = 1; p <= options.power_n_max; ++p) {
      if (p >= 64 || k > (UINT64_MAX >> p)) break;  // 2^p * k not representable
      ++entry.checked;
      const std::uint64_t shifted = k << p;
      if (stopping_steps(shifted, cache) != base + p)
        add_witness(entry, options,
                    "k=" + std::to_string(k) + " n=" + std::to_string(p));
    }
  }
  entry.note = "s(2^n * k) = s(k) + n on the k <= " +
               std::to_string(options.power_k_max) + ", n <= " +
               std::to_string(options.power_n_max) + " grid";
  return entry;
}

// Item 7: slack between the running max and the elements appended so far,
// at each n whose own level has two or more elements.
LemmaEntry report_max_slack(const LevelTable& t, std::uint64_t n,
                            const LemmaOptions& options,
                            const std::vector<std::uint64_t>& nz_prefix) {
  LemmaEntry entry;
  entry.id = 7;
  entry.status = LemmaStatus::Reported;
  bool have_min = false;
  std::uint64_t min_n = 0;
  double min_slack = 0.0;
  std::uint64_t last_n = 0;
  double last_slack = 0.0;
  std::uint64_t z_side_checked = 0;
  std::uint64_t z_side_held = 0;
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (t.element_count(x) < 2) continue;
    ++entry.checked;
    const double slack = static_cast<double>(t.max_seen_up_to(x)) -
                         static_cast<double>(t.cum_e(x));
    if (entry.samples.size() < 8) entry.samples.emplace_back(x, slack);
    if (!have_min || slack < min_slack) {
      have_min = true;
      min_slack = slack;
      min_n = x;
    }
    last_n = x;
    last_slack = slack;
    if (slack <= 0)
      add_witness(entry, options,
                  "n=" + std::to_string(x) + " slack=" + std::to_string(slack));
    // Companion comparison: elements appended so far against the count of
    // non-starters up to the running max, when that max is inside the table.
    const Value m = t.max_seen_up_to(x);
    if (m <= t.bound()) {
      ++z_side_checked;
      const std::uint64_t z_up_to_max = m - nz_prefix[m];
      if (t.cum_e(x) <= z_up_to_max) ++z_side_held;
    }
  }
  if (have_min) {
    entry.metric = last_slack;
    if (std::none_of(entry.samples.begin(), entry.samples.end(),
                     [&](const auto& s) { return s.first == min_n; }))
      entry.samples.emplace_back(min_n, min_slack);
    if (std::none_of(entry.samples.begin(), entry.samples.end(),
                     [&](const auto& s) { return s.first == last_n; }))
      entry.samples.emplace_back(last_n, last_slack);
    std::ostringstream note;
    note << "slack = maximal(n) - cum_e(n); last " << last_slack << " at n="
         << last_n << ", min " << min_slack << " at n=" << min_n
         << "; cum_e(n) <= z(maximal(n)) held " << z_side_held << "/"
         << z_side_checked << " of the cases with maximal(n) inside the table";
    entry.note = note.str();
  } else {
    entry.note = "no level with e(n) >= 2 below " + std::to_string(n);
  }
  return entry;
}

// Item 8: starters average below the midpoint once any non-starter exists.
LemmaEntry report_starter_average(const LevelTable& t, std::uint64_t n,
                                  const LemmaOptions& options) {
  LemmaEntry entry;
  entry.id = 8;
  entry.status = LemmaStatus::Reported;
  std::uint64_t starter_sum = 0;
  std::uint64_t nz = 0;
  for (std::uint64_t x = 1; x <= n; ++x) {
    ++entry.checked;
    if (t.element_count(x) > 0) {
      starter_sum += x;
      ++nz;
    }
    // Exact comparison: 2 * sum vs x * (x + 1), strict once a zero exists.
    const unsigned __int128 lhs = static_cast<unsigned __int128>(starter_sum) * 2;
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(x) * (x + 1);
    const bool any_zero = nz < x;
    if (lhs > rhs || (any_zero && lhs == rhs))
      add_witness(entry, options, "n=" + std::to_string(x));
  }
  const double avg = static_cast<double>(starter_sum) / static_cast<double>(n);
  const double midpoint = (static_cast<double>(n) + 1.0) / 2.0;
  entry.metric = midpoint - avg;
  std::ostringstream note;
  note << "starter_avg " << avg << " vs (n+1)/2 = " << midpoint << " at n=" << n;
  entry.note = note.str();
  return entry;
}

// Item 9: the starter ratio series at decade checkpoints, reported only.
LemmaEntry report_starter_ratio(std::uint64_t n,
                                const std::vector<std::uint64_t>& nz_prefix) {
  LemmaEntry entry;
  entry.id = 9;
  entry.status = LemmaStatus::Reported;
  std::ostringstream note;
  note << "nz(n)/n:";
  for (std::uint64_t d = 10; d <= n; d *= 10) {
    const double ratio =
        static_cast<double>(nz_prefix[d]) / static_cast<double>(d);
    entry.samples.emplace_back(d, ratio);
    note << " " << d << ":" << ratio;
    ++entry.checked;
  }
  const double at_n = static_cast<double>(nz_prefix[n]) / static_cast<double>(n);
  entry.metric = at_n;
  if (entry.samples.empty() || entry.samples.back().first != n) {
    entry.samples.emplace_back(n, at_n);
    note << " " << n << ":" << at_n;
    ++entry.checked;
  }
  entry.note = note.str();
  return entry;
}

}  // namespace

LemmaReport verify_lemmas(const LevelTable& table, std::uint64_t n,
                          const std::vector<int>& ids,
                          const LemmaOptions& options) {
  if (n == 0 || n > table.bound())
    throw OutOfRangeError("verify_lemmas: bound outside 1.." +
                          std::to_string(table.bound()));
  std::set<int> wanted(ids.begin(), ids.end());
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int id : wanted)
    if (id < 1 || id > 9)
      throw OutOfRangeError("verify_lemmas: no item " + std::to_string(id));

  StoppingCache cache;
  std::vector<std::uint64_t> nz_prefix;
  if (wanted.count(7) || wanted.count(9)) {
    nz_prefix.assign(table.bound() + 1, 0);
    for (std::uint64_t x = 1; x <= table.bound(); ++x)
      nz_prefix[x] = nz_prefix[x - 1] + (table.element_count(x) > 0 ? 1 : 0);
  }

  LemmaReport report;
  for (int id : wanted) {
    switch (id) {
      case 1: report.entries.push_back(check_owned_or_empty(table, n, options)); break;
      case 2: report.entries.push_back(check_nonempty_is_starter(table, n, options)); break;
      case 3: report.entries.push_back(check_count_matches_steps(table, n, options, cache)); break;
      case 4: report.entries.push_back(check_steps_decrease(table, n, options, cache)); break;
      case 5: report.entries.push_back(check_members_empty(table, n, options)); break;
      case 6: report.entries.push_back(check_power_shift(table, n, options, cache)); break;
      case 7: report.entries.push_back(report_max_slack(table, n, options, nz_prefix)); break;
      case 8: report.entries.push_back(report_starter_average(table, n, options)); break;
      case 9: report.entries.push_back(report_starter_ratio(n, nz_prefix)); break;
    }
  }
  return report;
}

}  // namespace collatz
