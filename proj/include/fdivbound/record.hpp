// Copyright 2026 The fdivbound Authors
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

#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"

namespace fdivbound {

/// Significant digits written for finite values: JSON round-trips doubles,
/// CSV is meant for reading.
inline constexpr int kJsonDigits = 17;
inline constexpr int kCsvDigits = 12;

using Value = std::variant<std::string, ExtendedReal, std::vector<ExtendedReal>>;
using Field = std::pair<std::string, Value>;

enum class Status { Pass, Fail, NotApplicable };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "n/a";
  }
  return "n/a";
}

/// One command's output. Field order is insertion order.
struct OutputRecord {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Field> results;
  Status status = Status::NotApplicable;

  const Value* result(std::string_view key) const {
    for (const auto& [k, v] : results)
      if (k == key) return &v;
    return nullptr;
  }
};

/// A CSV-shaped table, e.g. bound comparisons.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  Status status = Status::NotApplicable;
};

namespace detail {

inline std::string json_escape(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline std::string json_number(ExtendedReal x) {
  if (!x.is_finite()) return json_escape(format_extended(x));
  return format_extended(x, kJsonDigits);
}

inline std::string json_value(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return json_escape(*s);
  if (const auto* x = std::get_if<ExtendedReal>(&v)) return json_number(*x);
  const auto& xs = std::get<std::vector<ExtendedReal>>(v);
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + json_number(xs[i]);
  return out + "]";
}

inline std::string json_object(const std::vector<Field>& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i)
    out += (i ? "," : "") + json_escape(fields[i].first) + ":" + json_value(fields[i].second);
  return out + "}";
}

inline std::string csv_cell(std::string text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string csv_value(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return csv_cell(*s);
  if (const auto* x = std::get_if<ExtendedReal>(&v)) return format_extended(*x, kCsvDigits);
  const auto& xs = std::get<std::vector<ExtendedReal>>(v);
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ";" : "") + format_extended(xs[i], kCsvDigits);
  return csv_cell(out);
}

}  // namespace detail

inline std::string to_json(const OutputRecord& r) {
  return "{\"command\":" + detail::json_escape(r.command) + ",\"inputs\":" + detail::json_object(r.inputs) +
         ",\"results\":" + detail::json_object(r.results) + ",\"status\":" +
         detail::json_escape(to_string(r.status)) + "}\n";
}

/// Header row of command, status, inputs then results; a single data row.
inline std::string to_csv(const OutputRecord& r) {
  std::string header = "command,status";
  std::string row = detail::csv_cell(r.command) + "," + std::string(to_string(r.status));
  for (const auto* fields : {&r.inputs, &r.results}) {
    for (const auto& [k, v] : *fields) {
      header += "," + detail::csv_cell(k);
      row += "," + detail::csv_value(v);
    }
  }
  return header + "\n" + row + "\n";
}

inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + detail::csv_cell(t.columns[i]);
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_value(row[i]);
    out += "\n";
  }
  return out;
}

inline std::string to_json(const Table& t) {
  std::string out = "{\"command\":" + detail::json_escape(t.command) + ",\"columns\":[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + detail::json_escape(t.columns[i]);
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) out += (i ? "," : "") + detail::json_value(t.rows[r][i]);
    out += "]";
  }
  return out + "],\"status\":" + detail::json_escape(to_string(t.status)) + "}\n";
}

}  // namespace fdivbound
