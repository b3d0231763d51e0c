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
#include <cstdint>
#include <string>
#include <vector>

#include "pausegraph/ids.hpp"
#include "pausegraph/value.hpp"

namespace pausegraph {

/// One attribute column of a column group. Cells are typed by the column tag
/// or absent; only the storage vector for the column's tag is populated.
class Column {
 public:
  explicit Column(ValueTag tag) : tag_(tag) {}

  ValueTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return present_.size(); }

  void reserve(std::size_t n);
  // `v` must be absent or carry the column tag.
  void append(const Value& v);

  Value get(RowIndex row) const;
  bool is_present(RowIndex row) const { return present_[row] != 0; }
  bool compare(RowIndex row, CompareOp op, const Value& constant) const;

 private:
  ValueTag tag_;
  std::vector<std::uint8_t> present_;
  std::vector<std::int64_t> ints_;  // int and timestamp
  std::vector<double> floats_;
  std::vector<std::string> texts_;
  std::vector<std::uint8_t> bools_;
};

}  // namespace pausegraph
