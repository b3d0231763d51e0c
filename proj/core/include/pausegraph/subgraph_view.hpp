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
#include <unordered_map>
#include <vector>

#include "pausegraph/driver_query.hpp"
#include "pausegraph/exploration.hpp"
#include "pausegraph/ids.hpp"

namespace pausegraph {

struct ViewVertex {
  VertexId id;
  std::string type;
  AttributeMap attributes;
  bool operator==(const ViewVertex&) const = default;
};

struct ViewEdge {
  EdgeId id;
  std::string type;
  VertexId source;
  VertexId target;
  AttributeMap attributes;
  bool operator==(const ViewEdge&) const = default;
};

/// The client-visible excerpt of the graph. Grows only by set-union merges,
/// so merging the same delta twice leaves it unchanged. Elements keep the
/// order in which they were first added.
class SubgraphView {
 public:
  const std::vector<ViewVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<ViewEdge>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return vertices_.empty() && edges_.empty(); }

  bool contains(ElementRef e) const;

  // Both return false when the element was already present.
  bool add_vertex(VertexId id, std::string type);
  bool add_edge(EdgeId id, std::string type, VertexId source, VertexId target);
  // No-op for elements not in the view.
  void set_attribute(ElementRef e, const std::string& name, Value value);

  void merge(const SubgraphDelta& delta);
  // Vertex matches only; an edge match carries no endpoints.
  void merge(const MatchEvent& match);
  // Attributes of elements not in the view are ignored.
  void merge(const AttributeFetchResult& fetched);

  /// First edge whose endpoints are not both in the view, if any.
  std::optional<EdgeId> first_dangling_edge() const;

  bool operator==(const SubgraphView& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  AttributeMap* attributes_of(ElementRef e);

  std::vector<ViewVertex> vertices_;
  std::vector<ViewEdge> edges_;
  std::unordered_map<RowIndex, std::size_t> vertex_index_;
  std::unordered_map<RowIndex, std::size_t> edge_index_;
};

}  // namespace pausegraph
