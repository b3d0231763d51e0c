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
#include <string>
#include <vector>

#include "pausegraph/ids.hpp"
#include "pausegraph/value.hpp"

namespace pausegraph {

struct Comparison {
  std::string attribute;
  CompareOp op = CompareOp::kEq;
  Value constant;

  bool operator==(const Comparison&) const = default;
};

/// Conjunction of attribute comparisons. Serves both as a scan filter and as
/// a breakpoint condition. The empty conjunction holds for every live element.
struct Predicate {
  std::vector<Comparison> conjuncts;

  static Predicate always() { return {}; }
  bool is_always_true() const noexcept { return conjuncts.empty(); }

  Predicate& where(std::string attribute, CompareOp op, Value constant) {
    conjuncts.push_back({std::move(attribute), op, std::move(constant)});
    return *this;
  }

  bool operator==(const Predicate&) const = default;
};

/// A predicate resolved against one element class of a schema: attribute
/// names are replaced by column indices and constant tags are checked.
/// Produced by Dataset::bind.
struct BoundPredicate {
  struct Term {
    std::size_t attribute = 0;
    CompareOp op = CompareOp::kEq;
    Value constant;
  };

  ElementClass cls = ElementClass::kVertex;
  std::vector<Term> terms;
};

}  // namespace pausegraph
