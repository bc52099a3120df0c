#ifndef ABCT_SERIALIZE_HPP
#define ABCT_SERIALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abct/search.hpp"

namespace abct {

inline constexpr const char* kProjectVersion = "0.1.0";

// One output row. Column order is fixed: p, k, n, d, a, b, c, s, rad_abc,
// quality. Fields that do not apply to a command stay empty.
struct ResultRow {
  std::optional<unsigned> p;
  std::optional<unsigned> k;
  std::optional<Int> n;
  std::optional<Int> d;
  Int a;
  Int b;
  Int c;
  std::optional<Int> s;
  std::optional<Int> rad_abc;
  std::optional<double> quality;

  bool operator==(const ResultRow& o) const;
};

ResultRow to_row(const ScoredTriple& st);
ResultRow to_row(const OracleHit& hit);

// CSV with a header line; quality printed with 6 decimal places, integers in
// full decimal.
std::string render_csv(const std::vector<ResultRow>& rows);

// Same columns and values as the CSV, aligned for reading.
std::string render_table(const std::vector<ResultRow>& rows);

// Top-level JSON document: command, grid or params, results, skipped,
// version. Integers are serialized as decimal strings so nothing is lost
// above 64 bits; quality is a JSON number (round-trips exactly).
struct JsonDoc {
  std::string command;
  bool grid_context = false;  // emit "grid" instead of "params"
  std::vector<std::pair<std::string, std::string>> context;
  std::vector<ResultRow> rows;
  std::vector<SkippedEntry> skipped;
  std::vector<std::string> notes;
  std::string extra_key;   // optional raw-JSON attachment (e.g. ecs stats)
  std::string extra_json;
};

std::string render_json(const JsonDoc& doc);

// Parses the "results" array of a document produced by render_json back into
// rows; inverse of the emitter for every row field.
std::vector<ResultRow> parse_results_json(const std::string& text);

std::string format_quality(double q);  // fixed 6 decimals, the CSV rule

}  // namespace abct

#endif  // ABCT_SERIALIZE_HPP
