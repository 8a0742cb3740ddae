/*
 * Copyright 2026 The Glassbox Authors.
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

#include "glassbox/csv.h"

#include <fstream>

#include "glassbox/error.h"

namespace glassbox::csv {
namespace {

// Splits one logical record. Quoted fields may span physical lines, so the
// reader pulls more lines from `in` when a quote is left open.
bool ReadRecord(std::istream& in, std::size_t& line_no,
                std::vector<std::string>& fields) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++line_no;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  for (;;) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      any = true;
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            ++i;
          } else {
            in_quotes = false;
          }
        } else {
          field.push_back(c);
        }
      } else if (c == '"') {
        in_quotes = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '\r' && i + 1 == line.size()) {
        // CRLF
      } else {
        field.push_back(c);
      }
    }
    if (!in_quotes) break;
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::kUnparsableValue,
                  "unterminated quoted field starting before line " +
                      std::to_string(line_no));
    }
    ++line_no;
    field.push_back('\n');
  }
  if (any) fields.push_back(std::move(field));
  return true;
}

bool IsBlank(const std::vector<std::string>& fields) {
  if (fields.empty()) return true;
  if (fields.size() == 1) {
    for (char c : fields[0]) {
      if (c != ' ' && c != '\t') return false;
    }
    return true;
  }
  return false;
}

}  // namespace

Table Parse(std::istream& in) {
  Table table;
  std::size_t line_no = 0;
  std::vector<std::string> fields;
  bool have_header = false;
  std::size_t record_start = 0;
  while (true) {
    record_start = line_no + 1;
    if (!ReadRecord(in, line_no, fields)) break;
    if (IsBlank(fields)) continue;
    if (!have_header) {
      if (fields[0].starts_with("\xEF\xBB\xBF")) fields[0].erase(0, 3);
      table.header = fields;
      have_header = true;
      continue;
    }
    table.rows.push_back(fields);
    table.line_numbers.push_back(record_start);
  }
  if (!have_header) throw Error(ErrorCode::kEmptyFile, "no header row");
  return table;
}

Table ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return Parse(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::string Escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string JoinRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += Escape(fields[i]);
  }
  return out;
}

}  // namespace glassbox::csv
