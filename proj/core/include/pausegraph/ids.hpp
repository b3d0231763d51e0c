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
#include <functional>
#include <optional>
#include <string_view>

namespace pausegraph {

using RowIndex = std::uint32_t;

enum class ElementClass : std::uint8_t { kVertex, kEdge };

std::string_view to_string(ElementClass cls);
std::optional<ElementClass> parse_element_class(std::string_view text);

// Ids are dense row indices into the vertex (resp. edge) column group and
// double as the logical pointers stored in the adjacency index. Deleted rows
// keep their id; ids are never reused.
struct VertexId {
  RowIndex row = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  RowIndex row = 0;
  auto operator<=>(const EdgeId&) const = default;
};

struct ElementRef {
  ElementClass cls = ElementClass::kVertex;
  RowIndex row = 0;

  static ElementRef of(VertexId v) { return {ElementClass::kVertex, v.row}; }
  static ElementRef of(EdgeId e) { return {ElementClass::kEdge, e.row}; }

  auto operator<=>(const ElementRef&) const = default;
};

enum class Direction : std::uint8_t { kOut, kIn, kBoth };

std::string_view to_string(Direction dir);
std::optional<Direction> parse_direction(std::string_view text);

}  // namespace pausegraph

template <>
struct std::hash<pausegraph::ElementRef> {
  std::size_t operator()(const pausegraph::ElementRef& r) const noexcept {
    return (static_cast<std::size_t>(r.row) << 1) | static_cast<std::size_t>(r.cls);
  }
};
