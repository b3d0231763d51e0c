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

#include "pausegraph/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "pausegraph/error.hpp"

namespace pausegraph {

std::string_view to_string(ElementClass cls) {
  return cls == ElementClass::kVertex ? "vertex" : "edge";
}

std::optional<ElementClass> parse_element_class(std::string_view text) {
  if (text == "vertex") return ElementClass::kVertex;
  if (text == "edge") return ElementClass::kEdge;
  return std::nullopt;
}

std::string_view to_string(Direction dir) {
  switch (dir) {
    case Direction::kOut:
      return "out";
    case Direction::kIn:
      return "in";
    case Direction::kBoth:
      return "both";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "out") return Direction::kOut;
  if (text == "in") return Direction::kIn;
  if (text == "both") return Direction::kBoth;
  return std::nullopt;
}

namespace {

std::vector<AttributeDecl> with_type_attribute(std::vector<AttributeDecl> declared,
                                               std::string_view cls) {
  std::vector<AttributeDecl> out;
  out.reserve(declared.size() + 1);
  out.push_back({std::string(kTypeAttribute), ValueTag::kText});
  std::unordered_set<std::string> seen{std::string(kTypeAttribute)};
  for (auto& decl : declared) {
    if (decl.name == kTypeAttribute) {
      if (decl.tag != ValueTag::kText) {
        throw Error(ErrorCode::kInvalidSpec,
                    "reserved attribute 'type' must be text in " + std::string(cls) + " schema");
      }
      continue;
    }
    if (decl.name.empty()) {
      throw Error(ErrorCode::kInvalidSpec, "empty attribute name in " + std::string(cls) + " schema");
    }
    if (!seen.insert(decl.name).second) {
      throw Error(ErrorCode::kInvalidSpec,
                  "duplicate " + std::string(cls) + " attribute '" + decl.name + "'");
    }
    out.push_back(std::move(decl));
  }
  return out;
}

void check_unique_types(const std::vector<std::string>& types, std::string_view cls) {
  std::unordered_set<std::string_view> seen;
  for (const auto& t : types) {
    if (t.empty() || !seen.insert(t).second) {
      throw Error(ErrorCode::kInvalidSpec,
                  "duplicate or empty " + std::string(cls) + " type '" + t + "'");
    }
  }
}

}  // namespace

Schema::Schema(std::vector<std::string> vertex_types, std::vector<std::string> edge_types,
               std::vector<AttributeDecl> vertex_attributes,
               std::vector<AttributeDecl> edge_attributes)
    : vertex_types_(std::move(vertex_types)),
      edge_types_(std::move(edge_types)),
      vertex_attributes_(with_type_attribute(std::move(vertex_attributes), "vertex")),
      edge_attributes_(with_type_attribute(std::move(edge_attributes), "edge")) {
  check_unique_types(vertex_types_, "vertex");
  check_unique_types(edge_types_, "edge");
}

std::optional<std::size_t> Schema::attribute_index(ElementClass cls, std::string_view name) const {
  const auto& attrs = attributes(cls);
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<ValueTag> Schema::attribute_tag(ElementClass cls, std::string_view name) const {
  if (auto idx = attribute_index(cls, name)) return attributes(cls)[*idx].tag;
  return std::nullopt;
}

std::optional<std::size_t> Schema::type_index(ElementClass cls, std::string_view type_name) const {
  const auto& names = types(cls);
  auto it = std::find(names.begin(), names.end(), type_name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace pausegraph
