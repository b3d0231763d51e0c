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

#include "pausegraph/value.hpp"

#include <sstream>

namespace pausegraph {

std::string_view to_string(ValueTag tag) {
  switch (tag) {
    case ValueTag::kInt:
      return "int";
    case ValueTag::kFloat:
      return "float";
    case ValueTag::kText:
      return "str";
    case ValueTag::kBool:
      return "bool";
    case ValueTag::kTimestamp:
      return "ts";
  }
  return "?";
}

std::optional<ValueTag> parse_value_tag(std::string_view text) {
  if (text == "int") return ValueTag::kInt;
  if (text == "float") return ValueTag::kFloat;
  if (text == "str") return ValueTag::kText;
  if (text == "bool") return ValueTag::kBool;
  if (text == "ts") return ValueTag::kTimestamp;
  return std::nullopt;
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq:
      return "eq";
    case CompareOp::kNe:
      return "ne";
    case CompareOp::kLt:
      return "lt";
    case CompareOp::kLe:
      return "le";
    case CompareOp::kGt:
      return "gt";
    case CompareOp::kGe:
      return "ge";
  }
  return "?";
}

std::optional<CompareOp> parse_compare_op(std::string_view text) {
  if (text == "eq") return CompareOp::kEq;
  if (text == "ne") return CompareOp::kNe;
  if (text == "lt") return CompareOp::kLt;
  if (text == "le") return CompareOp::kLe;
  if (text == "gt") return CompareOp::kGt;
  if (text == "ge") return CompareOp::kGe;
  return std::nullopt;
}

std::optional<ValueTag> Value::tag() const noexcept {
  switch (storage_.index()) {
    case 1:
      return ValueTag::kInt;
    case 2:
      return ValueTag::kFloat;
    case 3:
      return ValueTag::kText;
    case 4:
      return ValueTag::kBool;
    case 5:
      return ValueTag::kTimestamp;
    default:
      return std::nullopt;
  }
}

std::string Value::to_debug_string() const {
  std::ostringstream out;
  switch (storage_.index()) {
    case 0:
      out << "absent";
      break;
    case 1:
      out << as_int();
      break;
    case 2:
      out << as_float();
      break;
    case 3:
      out << '"' << as_text() << '"';
      break;
    case 4:
      out << (as_bool() ? "true" : "false");
      break;
    case 5:
      out << "ts:" << as_timestamp().seconds;
      break;
  }
  return out.str();
}

namespace {

template <typename T>
bool apply(const T& lhs, CompareOp op, const T& rhs) {
  switch (op) {
    case CompareOp::kEq:
      return lhs == rhs;
    case CompareOp::kNe:
      return lhs != rhs;
    case CompareOp::kLt:
      return lhs < rhs;
    case CompareOp::kLe:
      return lhs <= rhs;
    case CompareOp::kGt:
      return lhs > rhs;
    case CompareOp::kGe:
      return lhs >= rhs;
  }
  return false;
}

}  // namespace

bool compare(const Value& lhs, CompareOp op, const Value& rhs) {
  auto lt = lhs.tag();
  auto rt = rhs.tag();
  if (!lt || !rt || *lt != *rt) return false;
  switch (*lt) {
    case ValueTag::kInt:
      return apply(lhs.as_int(), op, rhs.as_int());
    case ValueTag::kFloat:
      return apply(lhs.as_float(), op, rhs.as_float());
    case ValueTag::kText:
      return apply(std::string_view(lhs.as_text()), op, std::string_view(rhs.as_text()));
    case ValueTag::kBool:
      return apply(lhs.as_bool(), op, rhs.as_bool());
    case ValueTag::kTimestamp:
      return apply(lhs.as_timestamp().seconds, op, rhs.as_timestamp().seconds);
  }
  return false;
}

}  // namespace pausegraph
