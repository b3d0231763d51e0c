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

#include "pausegraph/csv.hpp"

#include "pausegraph/error.hpp"

namespace pausegraph::csv {

bool Reader::next_row(std::vector<Field>& row) {
  row.clear();
  int c = in_.get();
  if (c == std::char_traits<char>::eof()) return false;
  row_line_ = next_line_;

  Field current;
  bool in_quotes = false;
  bool field_started = false;
  for (;; c = in_.get()) {
    if (c == std::char_traits<char>::eof()) {
      if (in_quotes) {
        throw Error(ErrorCode::kInvalidSpec,
                    "unterminated quoted field starting on line " + std::to_string(row_line_));
      }
      row.push_back(std::move(current));
      return true;
    }
    const char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          current.text.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++next_line_;
        current.text.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && !field_started) {
      in_quotes = true;
      current.quoted = true;
      field_started = true;
    } else if (ch == ',') {
      row.push_back(std::move(current));
      current = Field{};
      field_started = false;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && in_.peek() == '\n') in_.get();
      ++next_line_;
      row.push_back(std::move(current));
      return true;
    } else {
      current.text.push_back(ch);
      field_started = true;
    }
  }
}

bool needs_quotes(std::string_view text) {
  return text.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string quote(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char ch : text) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void Writer::field(std::string_view text, bool missing) {
  if (!first_) out_.put(',');
  first_ = false;
  if (missing) return;
  if (text.empty() || needs_quotes(text)) {
    out_ << quote(text);
  } else {
    out_ << text;
  }
}

void Writer::end_row() {
  out_.put('\n');
  first_ = true;
}

}  // namespace pausegraph::csv
