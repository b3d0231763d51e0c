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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace pausegraph {

enum class ValueTag : std::uint8_t { kInt, kFloat, kText, kBool, kTimestamp };

std::string_view to_string(ValueTag tag);
// Accepts the wire spellings "int", "float", "str", "bool", "ts".
std::optional<ValueTag> parse_value_tag(std::string_view text);

/// Seconds since the Unix epoch.
struct Timestamp {
  std::int64_t seconds = 0;
  auto operator<=>(const Timestamp&) const = default;
};

enum class CompareOp : std::uint8_t { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view to_string(CompareOp op);
// Accepts "eq", "ne", "lt", "le", "gt", "ge".
std::optional<CompareOp> parse_compare_op(std::string_view text);

/// A single attribute cell. Either absent or carrying exactly one of the
/// supported tags. Built through the named factories so that string literals
/// never silently become booleans.
class Value {
 public:
  Value() = default;

  static Value Int(std::int64_t v) { return Value(Storage(std::in_place_index<1>, v)); }
  static Value Float(double v) { return Value(Storage(std::in_place_index<2>, v)); }
  static Value Text(std::string v) { return Value(Storage(std::in_place_index<3>, std::move(v))); }
  static Value Bool(bool v) { return Value(Storage(std::in_place_index<4>, v)); }
  static Value Time(std::int64_t seconds) {
    return Value(Storage(std::in_place_index<5>, Timestamp{seconds}));
  }

  bool is_absent() const noexcept { return storage_.index() == 0; }
  // nullopt when absent.
  std::optional<ValueTag> tag() const noexcept;

  std::int64_t as_int() const { return std::get<1>(storage_); }
  double as_float() const { return std::get<2>(storage_); }
  const std::string& as_text() const { return std::get<3>(storage_); }
  bool as_bool() const { return std::get<4>(storage_); }
  Timestamp as_timestamp() const { return std::get<5>(storage_); }

  bool operator==(const Value&) const = default;

  // Human-readable rendering for diagnostics and CLI output.
  std::string to_debug_string() const;

 private:
  using Storage = std::variant<std::monostate, std::int64_t, double, std::string, bool, Timestamp>;
  explicit Value(Storage s) : storage_(std::move(s)) {}

  Storage storage_;
};

/// Applies `lhs op rhs`. Absent operands and operands with differing tags
/// compare false under every operator.
bool compare(const Value& lhs, CompareOp op, const Value& rhs);

}  // namespace pausegraph
