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

#ifndef GLASSBOX_CSV_H_
#define GLASSBOX_CSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace glassbox::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based line number of each data row in the source text.
  std::vector<std::size_t> line_numbers;
};

// Comma-separated, first row is the header. Supports RFC 4180 quoting, CRLF
// line endings and a leading UTF-8 byte-order mark. Blank lines are skipped.
Table Parse(std::istream& in);
Table ReadFile(const std::string& path);

std::string Escape(std::string_view field);
std::string JoinRow(const std::vector<std::string>& fields);

}  // namespace glassbox::csv

#endif  // GLASSBOX_CSV_H_
