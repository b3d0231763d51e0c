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

#include "pausegraph/subgraph_view.hpp"

namespace pausegraph {

bool SubgraphView::contains(ElementRef e) const {
  return e.cls == ElementClass::kVertex ? vertex_index_.count(e.row) != 0
                                        : edge_index_.count(e.row) != 0;
}

bool SubgraphView::add_vertex(VertexId id, std::string type) {
  auto [it, inserted] = vertex_index_.try_emplace(id.row, vertices_.size());
  if (!inserted) return false;
  vertices_.push_back(ViewVertex{id, std::move(type), {}});
  return true;
}

bool SubgraphView::add_edge(EdgeId id, std::string type, VertexId source, VertexId target) {
  auto [it, inserted] = edge_index_.try_emplace(id.row, edges_.size());
  if (!inserted) return false;
  edges_.push_back(ViewEdge{id, std::move(type), source, target, {}});
  return true;
}

AttributeMap* SubgraphView::attributes_of(ElementRef e) {
  if (e.cls == ElementClass::kVertex) {
    auto it = vertex_index_.find(e.row);
    return it == vertex_index_.end() ? nullptr : &vertices_[it->second].attributes;
  }
  auto it = edge_index_.find(e.row);
  return it == edge_index_.end() ? nullptr : &edges_[it->second].attributes;
}

void SubgraphView::set_attribute(ElementRef e, const std::string& name, Value value) {
  if (auto* attrs = attributes_of(e)) attrs->insert_or_assign(name, std::move(value));
}

void SubgraphView::merge(const SubgraphDelta& delta) {
  for (const auto& v : delta.vertices) add_vertex(v.id, v.type);
  for (const auto& e : delta.edges) add_edge(e.id, e.type, e.source, e.target);
}

void SubgraphView::merge(const MatchEvent& match) {
  if (match.element.cls == ElementClass::kVertex) {
    add_vertex(VertexId{match.element.row}, match.type);
  }
}

void SubgraphView::merge(const AttributeFetchResult& fetched) {
  for (const auto& entry : fetched.values) {
    auto* attrs = attributes_of(entry.element);
    if (!attrs) continue;
    for (const auto& [name, value] : entry.attributes) attrs->insert_or_assign(name, value);
  }
}

std::optional<EdgeId> SubgraphView::first_dangling_edge() const {
  for (const auto& e : edges_) {
    if (!vertex_index_.count(e.source.row) || !vertex_index_.count(e.target.row)) return e.id;
  }
  return std::nullopt;
}

}  // namespace pausegraph
