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

#include "pausegraph/column.hpp"

#include <string_view>

namespace pausegraph {

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

void Column::reserve(std::size_t n) {
  present_.reserve(n);
  switch (tag_) {
    case ValueTag::kInt:
    case ValueTag::kTimestamp:
      ints_.reserve(n);
      break;
    case ValueTag::kFloat:
      floats_.reserve(n);
      break;
    case ValueTag::kText:
      texts_.reserve(n);
      break;
    case ValueTag::kBool:
      bools_.reserve(n);
      break;
  }
}

void Column::append(const Value& v) {
  const bool present = !v.is_absent();
  present_.push_back(present ? 1 : 0);
  switch (tag_) {
    case ValueTag::kInt:
      ints_.push_back(present ? v.as_int() : 0);
      break;
    case ValueTag::kTimestamp:
      ints_.push_back(present ? v.as_timestamp().seconds : 0);
      break;
    case ValueTag::kFloat:
      floats_.push_back(present ? v.as_float() : 0.0);
      break;
    case ValueTag::kText:
      texts_.push_back(present ? v.as_text() : std::string());
      break;
    case ValueTag::kBool:
      bools_.push_back(present && v.as_bool() ? 1 : 0);
      break;
  }
}

Value Column::get(RowIndex row) const {
  if (!present_[row]) return Value();
  switch (tag_) {
    case ValueTag::kInt:
      return Value::Int(ints_[row]);
    case ValueTag::kTimestamp:
      return Value::Time(ints_[row]);
    case ValueTag::kFloat:
      return Value::Float(floats_[row]);
    case ValueTag::kText:
      return Value::Text(texts_[row]);
    case ValueTag::kBool:
      return Value::Bool(bools_[row] != 0);
  }
  return Value();
}

bool Column::compare(RowIndex row, CompareOp op, const Value& constant) const {
  if (!present_[row] || constant.tag() != tag_) return false;
  switch (tag_) {
    case ValueTag::kInt:
      return apply(ints_[row], op, constant.as_int());
    case ValueTag::kTimestamp:
      return apply(ints_[row], op, constant.as_timestamp().seconds);
    case ValueTag::kFloat:
      return apply(floats_[row], op, constant.as_float());
    case ValueTag::kText:
      return apply(std::string_view(texts_[row]), op, std::string_view(constant.as_text()));
    case ValueTag::kBool:
      return apply(bools_[row] != 0, op, constant.as_bool());
  }
  return false;
}

}  // namespace pausegraph
