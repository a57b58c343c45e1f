#include "collatz/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "collatz/iterate.hpp"

namespace collatz {

namespace {

constexpr const char* kLevelsHeader = "x,e,level,s,touch,level_max,ender,exit";
constexpr const char* kStatsHeader = "n,nz,z,nz_ratio,cum_e,maximal,starter_avg";

std::uint64_t parse_u64(const std::string& field, std::uint64_t line) {
  std::uint64_t out = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, "expected an unsigned integer, got \"" + field + "\"");
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::uint64_t export_levels_csv(const LevelTable& table, std::ostream& out) {
  out << kLevelsHeader << '\n';
  StoppingCache cache;
  for (std::uint64_t x = 1; x <= table.bound(); ++x) {
    const LevelRecord rec = table.record(x);
    out << x << ',' << rec.e << ',' << table.level_of(x) << ','
        << stopping_steps(x, cache) << ',' << table.visit_index(x) << ',';
    if (rec.level_max) out << *rec.level_max;
    out << ',';
    if (rec.ender) out << *rec.ender;
    out << ',';
    if (rec.exit_value) out << *rec.exit_value;
    out << '\n';
  }
  return table.bound();
}

std::uint64_t export_levels_jsonl(const LevelTable& table, std::ostream& out) {
  std::uint64_t written = 0;
  for (std::uint64_t x = 1; x <= table.bound(); ++x) {
    const LevelRecord rec = table.record(x);
    if (rec.e == 0) continue;
    nlohmann::ordered_json j;
    j["starter"] = x;
    j["elements"] = table.elements(x);
    if (rec.exit_value) j["exit"] = *rec.exit_value;
    out << j.dump() << '\n';
    ++written;
  }
  return written;
}

LevelTable import_levels_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kLevelsHeader)
    throw SchemaError("levels CSV must start with \"" +
                      std::string(kLevelsHeader) + "\"");
  LevelTableData data;
  // Row x lands at index x; sized as rows arrive.
  std::vector<std::string> fields;
  std::uint64_t line_no = 1;
  std::uint64_t x_expected = 1;
  std::vector<std::uint32_t> e{0};
  std::vector<std::uint32_t> level_of{0};
  std::vector<std::uint64_t> visit_index{0};
  std::vector<Value> level_max{0};
  std::vector<Value> ender{0};
  std::vector<Value> exit_value{0};
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) break;
    const auto f = split_fields(line);
    if (f.size() != 8)
      throw ParseError(line_no, "expected 8 fields, got " +
                                    std::to_string(f.size()));
    const std::uint64_t x = parse_u64(f[0], line_no);
    if (x != x_expected)
      throw ParseError(line_no, "rows must cover 1..N in order; expected x=" +
                                    std::to_string(x_expected));
    if (x > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(line_no, "bound exceeds 2^32 - 1");
    const std::uint64_t row_e = parse_u64(f[1], line_no);
    if (row_e > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(line_no, "element count out of range");
    const std::uint64_t owner = parse_u64(f[2], line_no);
    if (owner == 0 || owner > x)
      throw ParseError(line_no, "level must be in 1..x");
    parse_u64(f[3], line_no);  // s is derived; validated, not stored
    const std::uint64_t touch = parse_u64(f[4], line_no);
    const bool has_level_fields = row_e > 0;
    if (has_level_fields) {
      if (f[5].empty() || f[6].empty())
        throw ParseError(line_no, "non-empty level needs level_max and ender");
    } else if (!f[5].empty() || !f[6].empty() || !f[7].empty()) {
      throw ParseError(line_no, "empty level must leave level_max/ender/exit blank");
    }
    e.push_back(static_cast<std::uint32_t>(row_e));
    level_of.push_back(static_cast<std::uint32_t>(owner));
    visit_index.push_back(touch);
    level_max.push_back(has_level_fields ? parse_u64(f[5], line_no) : 0);
    ender.push_back(has_level_fields ? parse_u64(f[6], line_no) : 0);
    exit_value.push_back(f[7].empty() ? 0 : parse_u64(f[7], line_no));
    ++x_expected;
  }
  if (x_expected == 1) throw ParseError(line_no, "no data rows");
  data.bound = x_expected - 1;
  data.retained = false;
  data.e = std::move(e);
  data.level_of = std::move(level_of);
  data.visit_index = std::move(visit_index);
  data.level_max = std::move(level_max);
  data.ender = std::move(ender);
  data.exit_value = std::move(exit_value);
  return LevelTable::restore(std::move(data));
}

LevelTable import_levels_jsonl(std::istream& in) {
  struct Record {
    Value starter;
    std::vector<Value> elements;
    Value exit_value;  // 0 = absent
  };
  std::vector<Record> records;
  std::string line;
  std::uint64_t line_no = 0;
  Value bound = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) break;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw ParseError(line_no, err.what());
    }
    if (!j.is_object() || !j.contains("starter") || !j.contains("elements"))
      throw ParseError(line_no, "record needs starter and elements");
    if (!j["starter"].is_number_unsigned() || !j["elements"].is_array())
      throw ParseError(line_no, "starter must be unsigned, elements an array");
    Record rec;
    rec.starter = j["starter"].get<Value>();
    for (const auto& item : j["elements"]) {
      if (!item.is_number_unsigned())
        throw ParseError(line_no, "elements must be unsigned integers");
      rec.elements.push_back(item.get<Value>());
    }
    if (rec.elements.empty() || rec.elements.front() != rec.starter)
      throw ParseError(line_no, "elements must start with the starter");
    rec.exit_value = 0;
    if (j.contains("exit")) {
      if (!j["exit"].is_number_unsigned())
        throw ParseError(line_no, "exit must be unsigned");
      rec.exit_value = j["exit"].get<Value>();
    }
    if (rec.starter > std::numeric_limits<std::uint32_t>::max() ||
        rec.elements.size() > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(line_no, "starter or element count exceeds 2^32 - 1");
    if (!records.empty() && rec.starter <= records.back().starter)
      throw ParseError(line_no, "starters must be strictly increasing");
    bound = rec.starter;
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw ParseError(line_no, "no records");

  LevelTableData data;
  data.bound = bound;
  data.retained = true;
  const std::size_t size = static_cast<std::size_t>(bound) + 1;
  data.e.assign(size, 0);
  data.level_of.assign(size, 0);
  data.visit_index.assign(size, 0);
  data.level_max.assign(size, 0);
  data.ender.assign(size, 0);
  data.exit_value.assign(size, 0);
  data.elements.resize(size);
  std::uint64_t next_index = 0;
  for (auto& rec : records) {
    Value level_max = 0;
    for (Value v : rec.elements) {
      if (v <= bound) {
        data.level_of[v] = static_cast<std::uint32_t>(rec.starter);
        data.visit_index[v] = next_index;
      }
      ++next_index;
      if (v > level_max) level_max = v;
    }
    const std::size_t x = static_cast<std::size_t>(rec.starter);
    data.e[x] = static_cast<std::uint32_t>(rec.elements.size());
    data.level_max[x] = level_max;
    data.ender[x] = rec.elements.back();
    data.exit_value[x] = rec.exit_value;
    data.elements[x] = std::move(rec.elements);
  }
  return LevelTable::restore(std::move(data));
}

}  // namespace

std::uint64_t export_levels(const LevelTable& table,
                            const std::filesystem::path& path,
                            LevelsFormat format) {
  if (format == LevelsFormat::Jsonl && !table.retained())
    throw NotRetainedError("JSONL export needs retained element lists");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const std::uint64_t written = format == LevelsFormat::Csv
                                    ? export_levels_csv(table, out)
                                    : export_levels_jsonl(table, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
  return written;
}

LevelTable import_levels(const std::filesystem::path& path, LevelsFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return format == LevelsFormat::Csv ? import_levels_csv(in)
                                     : import_levels_jsonl(in);
}

std::string format_fixed6(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw OutOfRangeError("format_fixed6: denominator must be >= 1");
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * 1000000;
  unsigned __int128 q = scaled / den;
  const unsigned __int128 r2 = (scaled % den) * 2;
  if (r2 > den || (r2 == den && (q & 1))) ++q;
  const std::uint64_t whole = static_cast<std::uint64_t>(q / 1000000);
  const std::uint64_t frac = static_cast<std::uint64_t>(q % 1000000);
  char buf[8];
  std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(frac));
  return std::to_string(whole) + "." + buf;
}

std::uint64_t export_stats(const StatsSeries& series,
                           const std::filesystem::path& path) {
  if (series.rows.empty()) throw OutOfRangeError("export_stats: empty series");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << kStatsHeader << '\n';
  for (const StatsRow& row : series.rows) {
    out << row.n << ',' << row.nz << ',' << row.z << ','
        << format_fixed6(row.nz, row.n) << ',' << row.cum_e << ','
        << row.maximal << ',' << format_fixed6(row.starter_sum, row.n) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
  return series.rows.size();
}

CrosscheckReport oeis_crosscheck(const OeisFixture& fixture) {
  CrosscheckReport report;
  for (const OeisFixtureRow& row : fixture.rows) {
    ++report.checked;
    if (trajectory(row.n) != row.terms) report.mismatches.push_back(row.n);
  }
  return report;
}

}  // namespace collatz
