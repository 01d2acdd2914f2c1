#pragma once

// Exact, machine-readable serialization of distribution tables.
// Counts are decimal strings and rationals "p/q" strings; nothing goes through a float.

#include "hultman/census.hpp"
#include "hultman/exact.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hultman::cli {

enum class Format { csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format \"" + std::string(s) + "\" (expected csv or json)");
}

struct TableRow {
  int n;
  int k;
  ExactInt count;
};

inline std::string render_rows(const std::vector<TableRow>& rows, Format format) {
  if (format == Format::csv) {
    std::string out = "n,k,count\n";
    for (const auto& r : rows) out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.count.str() + "\n";
    return out;
  }
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) j["rows"].push_back({{"n", r.n}, {"k", r.k}, {"count", r.count.str()}});
  return j.dump(2) + "\n";
}

/// Single-n distribution. `dense_to` >= 0 also emits zero rows for k in [0, dense_to].
inline std::string render_distribution(const DistributionTable& t, Format format, int dense_to = -1) {
  std::vector<std::pair<int, ExactInt>> rows;
  if (dense_to >= 0) {
    for (int k = 0; k <= dense_to; ++k) rows.emplace_back(k, t.count(k));
  } else {
    for (const auto& [k, c] : t.counts()) rows.emplace_back(k, c);
  }
  if (format == Format::csv) {
    std::string out = "k,count\n";
    for (const auto& [k, c] : rows) out += std::to_string(k) + "," + c.str() + "\n";
    return out;
  }
  nlohmann::ordered_json j;
  j["n"] = t.n();
  j["statistic"] = t.statistic();
  j["total"] = t.total().str();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, c] : rows) counts[std::to_string(k)] = c.str();
  j["counts"] = counts;
  return j.dump(2) + "\n";
}

// Reads back either "n,k,count" or "k,count" CSV.
inline std::vector<TableRow> parse_csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty table");
  const bool has_n = line == "n,k,count";
  if (!has_n && line != "k,count") throw std::invalid_argument("unexpected header \"" + line + "\"");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != (has_n ? 3u : 2u)) throw std::invalid_argument("bad row \"" + line + "\"");
    TableRow r{has_n ? std::stoi(cells[0]) : -1, std::stoi(cells[has_n ? 1 : 0]), ExactInt(cells.back())};
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace hultman::cli
