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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sptprobe/harness/config.hpp"

namespace sptprobe::harness {

/// Table cell; monostate is a missing value (null in JSON, empty in CSV).
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Report {
  int schema_version = kSchemaVersion;
  std::string kind;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json diagnostics = Json::object();

  /// Index of a named column; throws std::out_of_range.
  std::size_t column(const std::string& name) const;
  /// Rows whose `key` column holds `value`.
  std::vector<const std::vector<Cell>*> select(const std::string& key, const Cell& value) const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Number or null, as a double (NaN for null and strings).
double as_double(const Cell& c);

enum class Format { json, csv };
Format parse_format(std::string_view text);
const char* extension(Format f);

/// Stable key order: schema_version, kind, seed, config, columns, rows,
/// diagnostics. Non-finite doubles become null.
Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string emit_json(const Report& r);

/// Header line, then one line per row. Metadata is not part of the CSV.
/// Integers print without a decimal point and doubles always carry one (or
/// an exponent), so parsing restores the cell types. Strings containing a
/// comma, quote or newline are quoted.
std::string emit_csv(const Report& r);
/// Rebuilds columns and rows from emit_csv output.
Report parse_csv(std::string_view text);

/// Writes <dir>/<kind>.<ext>, creating the directory. Returns the path.
/// Throws std::runtime_error on I/O failure.
std::string write_report(const Report& r, Format f, const std::string& dir);
std::string emit(const Report& r, Format f);

}  // namespace sptprobe::harness
