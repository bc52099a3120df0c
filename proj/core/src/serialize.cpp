/*
   Rendering and parsing of result sets. CSV and table carry the same
   values; JSON keeps big integers as decimal strings so round-trips are
   lossless.
*/

#include "abct/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace abct {

using nlohmann::json;

namespace {

constexpr const char* kColumns[] = {"p", "k", "n", "d", "a",
                                    "b", "c", "s", "rad_abc", "quality"};

std::string opt_str(const std::optional<unsigned>& v) {
  return v ? std::to_string(*v) : std::string{};
}

std::string opt_str(const std::optional<Int>& v) {
  return v ? v->get_str() : std::string{};
}

std::vector<std::string> row_cells(const ResultRow& r) {
  return {opt_str(r.p),
          opt_str(r.k),
          opt_str(r.n),
          opt_str(r.d),
          r.a.get_str(),
          r.b.get_str(),
          r.c.get_str(),
          opt_str(r.s),
          opt_str(r.rad_abc),
          r.quality ? format_quality(*r.quality) : std::string{}};
}

}  // namespace

bool ResultRow::operator==(const ResultRow& o) const {
  return p == o.p && k == o.k && n == o.n && d == o.d && a == o.a &&
         b == o.b && c == o.c && s == o.s && rad_abc == o.rad_abc &&
         quality == o.quality;
}

ResultRow to_row(const ScoredTriple& st) {
  ResultRow r;
  r.p = st.params.p;
  r.k = st.params.k;
  r.n = st.params.n;
  r.d = st.params.d;
  r.a = st.triple.a;
  r.b = st.triple.b;
  r.c = st.triple.c;
  r.s = derive_s(st.triple.c, st.params.p).s;
  r.rad_abc = st.report.rad_abc;
  r.quality = st.report.q;
  return r;
}

ResultRow to_row(const OracleHit& hit) {
  ResultRow r;
  r.a = Int(static_cast<unsigned long>(hit.a));
  r.b = Int(static_cast<unsigned long>(hit.b));
  r.c = Int(static_cast<unsigned long>(hit.c));
  r.rad_abc = Int(static_cast<unsigned long>(hit.rad_abc));
  r.quality = hit.q;
  return r;
}

std::string format_quality(double q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", q);
  return buf;
}

std::string render_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i)
    out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const ResultRow& r : rows) {
    const auto cells = row_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "," : "") << cells[i];
    out << '\n';
  }
  return out.str();
}

std::string render_table(const std::vector<ResultRow>& rows) {
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back(std::begin(kColumns), std::end(kColumns));
  for (const ResultRow& r : rows) grid.push_back(row_cells(r));

  std::vector<std::size_t> width(std::size(kColumns), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const JsonDoc& doc) {
  json j;
  j["command"] = doc.command;
  json ctx = json::object();
  for (const auto& [key, value] : doc.context) ctx[key] = value;
  j[doc.grid_context ? "grid" : "params"] = ctx;

  json results = json::array();
  for (const ResultRow& r : doc.rows) {
    json item = json::object();
    if (r.p) item["p"] = *r.p;
    if (r.k) item["k"] = *r.k;
    if (r.n) item["n"] = r.n->get_str();
    if (r.d) item["d"] = r.d->get_str();
    item["a"] = r.a.get_str();
    item["b"] = r.b.get_str();
    item["c"] = r.c.get_str();
    if (r.s) item["s"] = r.s->get_str();
    if (r.rad_abc) item["rad_abc"] = r.rad_abc->get_str();
    if (r.quality) item["quality"] = *r.quality;
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);

  json skipped = json::array();
  for (const SkippedEntry& s : doc.skipped) {
    skipped.push_back({{"p", s.params.p},
                       {"k", s.params.k},
                       {"n", s.params.n.get_str()},
                       {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped);
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  if (!doc.extra_key.empty()) j[doc.extra_key] = json::parse(doc.extra_json);
  j["version"] = kProjectVersion;
  return j.dump(2) + "\n";
}

std::vector<ResultRow> parse_results_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<ResultRow> rows;
  for (const json& item : j.at("results")) {
    ResultRow r;
    if (item.contains("p")) r.p = item["p"].get<unsigned>();
    if (item.contains("k")) r.k = item["k"].get<unsigned>();
    if (item.contains("n")) r.n = Int(item["n"].get<std::string>());
    if (item.contains("d")) r.d = Int(item["d"].get<std::string>());
    r.a = Int(item.at("a").get<std::string>());
    r.b = Int(item.at("b").get<std::string>());
    r.c = Int(item.at("c").get<std::string>());
    if (item.contains("s")) r.s = Int(item["s"].get<std::string>());
    if (item.contains("rad_abc"))
      r.rad_abc = Int(item["rad_abc"].get<std::string>());
    if (item.contains("quality")) r.quality = item["quality"].get<double>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace abct
