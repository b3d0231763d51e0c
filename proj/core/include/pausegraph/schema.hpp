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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pausegraph/ids.hpp"
#include "pausegraph/value.hpp"

namespace pausegraph {

inline constexpr std::string_view kTypeAttribute = "type";

struct AttributeDecl {
  std::string name;
  ValueTag tag = ValueTag::kText;
  bool operator==(const AttributeDecl&) const = default;
};

/// Vertex and edge type names plus the per-class attribute catalog.
///
/// The reserved text attribute "type" is always declared and always sits at
/// attribute index 0 of both classes; user attributes follow in declaration
/// order. Construction rejects duplicate names and a non-text "type".
class Schema {
 public:
  Schema() : Schema({}, {}, {}, {}) {}
  Schema(std::vector<std::string> vertex_types, std::vector<std::string> edge_types,
         std::vector<AttributeDecl> vertex_attributes, std::vector<AttributeDecl> edge_attributes);

  const std::vector<std::string>& types(ElementClass cls) const {
    return cls == ElementClass::kVertex ? vertex_types_ : edge_types_;
  }
  // Includes "type" at index 0.
  const std::vector<AttributeDecl>& attributes(ElementClass cls) const {
    return cls == ElementClass::kVertex ? vertex_attributes_ : edge_attributes_;
  }

  std::optional<std::size_t> attribute_index(ElementClass cls, std::string_view name) const;
  std::optional<ValueTag> attribute_tag(ElementClass cls, std::string_view name) const;
  std::optional<std::size_t> type_index(ElementClass cls, std::string_view type_name) const;

  bool operator==(const Schema&) const = default;

 private:
  std::vector<std::string> vertex_types_;
  std::vector<std::string> edge_types_;
  std::vector<AttributeDecl> vertex_attributes_;
  std::vector<AttributeDecl> edge_attributes_;
};

}  // namespace pausegraph
