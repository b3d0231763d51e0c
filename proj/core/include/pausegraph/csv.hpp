// Copyright 2026 The pausegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Comma-separated, first row header, UTF-8, minimal quoting with doubled
// quotes. A quoted empty field ("") is an empty string; an unquoted empty
// field is a missing value.
namespace pausegraph::csv {

struct Field {
  std::string text;
  bool quoted = false;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // False at end of input. Throws kInvalidSpec on an unterminated quote.
  bool next_row(std::vector<Field>& row);
  // 1-based line on which the last returned row started.
  std::size_t line() const noexcept { return row_line_; }

 private:
  std::istream& in_;
  std::size_t next_line_ = 1;
  std::size_t row_line_ = 0;
};

std::string quote(std::string_view text);
bool needs_quotes(std::string_view text);

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  // Missing cells are written as empty unquoted fields; empty strings as "".
  void field(std::string_view text, bool missing = false);
  void end_row();

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace pausegraph::csv
