/*
 * Copyright 2026 The sgmine Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Minimal RFC-4180 reader/writer plus number formatting shared by reports.

#ifndef SUBGROUP_CSV_HPP_
#define SUBGROUP_CSV_HPP_

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "subgroup/error.hpp"

namespace subgroup::csv {

using Row = std::vector<std::string>;

// Reads all records. Quoted fields may contain separators, doubled quotes and
// line breaks. Both LF and CRLF line endings are accepted. Blank lines are
// skipped.
inline std::vector<Row> Read(std::istream& in, char separator = ',') {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool quoted_field = false;
  std::size_t line = 1;
  char c = 0;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
    quoted_field = false;
  };
  auto end_row = [&] {
    if (field_started || !row.empty()) {
      end_field();
      rows.push_back(std::move(row));
    }
    row.clear();
  };

  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (field_started && !quoted_field && !field.empty()) {
        throw ParseError("unexpected quote inside unquoted field", line);
      }
      in_quotes = true;
      field_started = true;
      quoted_field = true;
    } else if (c == separator) {
      field_started = true;
      end_field();
      field_started = true;
    } else if (c == '\r') {
      if (in.peek() != '\n') field.push_back(c);
    } else if (c == '\n') {
      end_row();
      ++line;
    } else {
      if (quoted_field) {
        throw ParseError("characters after closing quote", line);
      }
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", line);
  end_row();
  return rows;
}

inline std::string Quote(std::string_view field, char separator = ',') {
  const bool needs_quotes =
      field.find_first_of(std::string{'"', '\n', '\r', separator}) !=
      std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void WriteRow(std::ostream& out, const Row& row, char separator = ',') {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i != 0) out << separator;
    out << Quote(row[i], separator);
  }
  out << '\n';
}

// Parses a complete field as a finite or non-finite double; nullopt when the
// text is not a number at all.
inline std::optional<double> ParseDouble(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin) return std::nullopt;
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') return std::nullopt;
  return value;
}

// Shortest "%.*g" rendering that round-trips, so reports are stable and exact.
inline std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

inline std::string FormatFixed(double value, int digits) {
  if (std::isnan(value)) return "-";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

}  // namespace subgroup::csv

#endif  // SUBGROUP_CSV_HPP_
