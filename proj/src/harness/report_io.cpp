// Copyright 2026 The sptprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "sptprobe/harness/report.hpp"

namespace sptprobe::harness {
namespace {

Json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? Json(v) : Json(nullptr);
        } else {
          return v;
        }
      },
      c);
}

Cell json_cell(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("report: unsupported cell " + j.dump());
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

Cell parse_field(const std::string& f, bool quoted);

// Strings that would read back as a number or as null get quotes too.
std::string quote(const std::string& s) {
  const bool plain = s.find_first_of(",\"\n\r") == std::string::npos &&
                     std::holds_alternative<std::string>(parse_field(s, false));
  if (plain) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return quote(v);
        }
      },
      c);
}

// A field that was quoted is always a string; otherwise the shape decides.
Cell parse_field(const std::string& f, bool quoted) {
  if (quoted) return f;
  if (f.empty()) return std::monostate{};
  std::int64_t i = 0;
  auto ri = std::from_chars(f.data(), f.data() + f.size(), i);
  if (ri.ec == std::errc{} && ri.ptr == f.data() + f.size()) return i;
  double d = 0.0;
  auto rd = std::from_chars(f.data(), f.data() + f.size(), d);
  if (rd.ec == std::errc{} && rd.ptr == f.data() + f.size()) return d;
  return f;
}

std::vector<std::pair<std::string, bool>> split_line(std::string_view text, std::size_t& pos) {
  std::vector<std::pair<std::string, bool>> fields;
  std::string cur;
  bool quoted = false, in_quotes = false;
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (in_quotes) {
      if (ch == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      in_quotes = quoted = true;
    } else if (ch == ',') {
      fields.emplace_back(std::move(cur), quoted);
      cur.clear();
      quoted = false;
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (in_quotes) throw std::invalid_argument("csv: unterminated quote");
  fields.emplace_back(std::move(cur), quoted);
  return fields;
}

}  // namespace

std::size_t Report::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("report has no column '" + name + "'");
}

std::vector<const std::vector<Cell>*> Report::select(const std::string& key, const Cell& value) const {
  const std::size_t k = column(key);
  std::vector<const std::vector<Cell>*> out;
  for (const auto& row : rows) {
    if (row[k] == value) out.push_back(&row);
  }
  return out;
}

double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("format must be json or csv");
}

const char* extension(Format f) { return f == Format::json ? "json" : "csv"; }

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["config"] = r.config;
  j["columns"] = r.columns;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(cell_json(c));
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["diagnostics"] = r.diagnostics;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema_version " + std::to_string(r.schema_version));
  }
  r.kind = j.at("kind").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config = j.at("config");
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jr : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : jr) row.push_back(json_cell(c));
    if (row.size() != r.columns.size()) throw std::invalid_argument("report: ragged row");
    r.rows.push_back(std::move(row));
  }
  r.diagnostics = j.at("diagnostics");
  return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string emit_csv(const Report& r) {
  std::string out;
  for (std::size_t i = 0; i < r.columns.size(); ++i) out += (i ? "," : "") + quote(r.columns[i]);
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

Report parse_csv(std::string_view text) {
  Report r;
  std::size_t pos = 0;
  for (auto& [name, q] : split_line(text, pos)) r.columns.push_back(name);
  while (pos < text.size()) {
    auto fields = split_line(text, pos);
    if (fields.size() == 1 && fields[0].first.empty() && !fields[0].second) continue;
    if (fields.size() != r.columns.size()) throw std::invalid_argument("csv: ragged row");
    std::vector<Cell> row;
    for (auto& [f, q] : fields) row.push_back(parse_field(f, q));
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string emit(const Report& r, Format f) { return f == Format::json ? emit_json(r) : emit_csv(r); }

std::string write_report(const Report& r, Format f, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir + "': " + ec.message());
  const auto path = (std::filesystem::path(dir) / (r.kind + "." + extension(f))).string();
  std::ofstream out(path, std::ios::binary);
  out << emit(r, f);
  out.close();
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return path;
}

}  // namespace sptprobe::harness
