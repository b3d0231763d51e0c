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

#include "pausegraph/exploration.hpp"

#include <unordered_set>

#include "pausegraph/error.hpp"

namespace pausegraph {

namespace {

struct BoundExpansion {
  BoundPredicate edge_filter;
  BoundPredicate vertex_filter;
};

BoundExpansion prepare(const Dataset& dataset, const ExpansionRequest& req) {
  if (!dataset.is_live(req.vertex)) {
    throw Error(ErrorCode::kDeadElement, "vertex " + std::to_string(req.vertex.row) +
                                             " is not live");
  }
  BoundExpansion bound;
  try {
    bound.edge_filter =
        dataset.bind(req.edge_filter.value_or(Predicate::always()), ElementClass::kEdge);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("edge_filter ") + e.what());
  }
  try {
    bound.vertex_filter =
        dataset.bind(req.vertex_filter.value_or(Predicate::always()), ElementClass::kVertex);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("vertex_filter ") + e.what());
  }
  return bound;
}

template <typename Visit>
void for_each_admitted(const Dataset& dataset, const ExpansionRequest& req,
                       const BoundExpansion& bound, Visit&& visit) {
  IncidenceCursor cursor(dataset, req.vertex, req.direction);
  while (auto inc = cursor.next()) {
    if (!dataset.matches(bound.edge_filter, inc->edge.row)) continue;
    if (!dataset.matches(bound.vertex_filter, inc->neighbor.row)) continue;
    if (!visit(*inc)) return;
  }
}

}  // namespace

SubgraphDelta expand_neighborhood(const Dataset& dataset, const ExpansionRequest& req) {
  if (req.limit && *req.limit == 0) {
    throw Error(ErrorCode::kInvalidSpec, "expansion limit must be positive");
  }
  const std::uint32_t limit = req.limit.value_or(kDefaultExpansionLimit);
  const auto bound = prepare(dataset, req);

  SubgraphDelta delta;
  std::unordered_set<RowIndex> seen{req.vertex.row};
  for_each_admitted(dataset, req, bound, [&](const Incidence& inc) {
    if (delta.edges.size() == limit) {
      delta.truncated = true;
      return false;
    }
    const EdgeId e = inc.edge;
    delta.edges.push_back(DeltaEdge{e, std::string(dataset.type_name(ElementRef::of(e))),
                                    dataset.source(e), dataset.target(e)});
    if (seen.insert(inc.neighbor.row).second) {
      delta.vertices.push_back(
          DeltaVertex{inc.neighbor, std::string(dataset.type_name(ElementRef::of(inc.neighbor)))});
    }
    return true;
  });
  return delta;
}

std::uint64_t estimate_expansion(const Dataset& dataset, const ExpansionRequest& req) {
  const auto bound = prepare(dataset, req);
  std::uint64_t count = 0;
  for_each_admitted(dataset, req, bound, [&](const Incidence&) {
    ++count;
    return true;
  });
  return count;
}

std::pair<EndpointInfo, EndpointInfo> incident_vertices(const Dataset& dataset, EdgeId edge) {
  const auto [src, dst] = dataset.endpoints(edge);
  return {EndpointInfo{src, std::string(dataset.type_name(ElementRef::of(src)))},
          EndpointInfo{dst, std::string(dataset.type_name(ElementRef::of(dst)))}};
}

AttributeFetchResult fetch_attributes(const Dataset& dataset, std::span<const ElementRef> elements,
                                      std::span<const std::string> names) {
  const auto& schema = dataset.schema();
  bool wants[2] = {false, false};
  for (const auto& e : elements) wants[static_cast<int>(e.cls)] = true;

  // Resolve names once per class so that a bad name fails the whole request.
  std::vector<std::size_t> indices[2];
  for (ElementClass cls : {ElementClass::kVertex, ElementClass::kEdge}) {
    if (!wants[static_cast<int>(cls)]) continue;
    for (const auto& name : names) {
      auto idx = schema.attribute_index(cls, name);
      if (!idx) {
        throw Error(ErrorCode::kInvalidSpec, "attribute '" + name + "' is not declared for " +
                                                 std::string(to_string(cls)) + "s");
      }
      indices[static_cast<int>(cls)].push_back(*idx);
    }
  }
  for (const auto& e : elements) {
    if (!dataset.is_allocated(e)) {
      throw Error(ErrorCode::kDeadElement, "unknown " + std::string(to_string(e.cls)) + " id " +
                                               std::to_string(e.row));
    }
  }

  AttributeFetchResult result;
  for (const auto& e : elements) {
    if (!dataset.is_live(e)) {
      result.deleted.push_back(e);
      continue;
    }
    AttributeFetchResult::Entry entry{e, {}};
    const auto& idx = indices[static_cast<int>(e.cls)];
    for (std::size_t i = 0; i < names.size(); ++i) {
      entry.attributes.insert_or_assign(names[i], dataset.cell(e, idx[i]));
    }
    result.values.push_back(std::move(entry));
  }
  return result;
}

}  // namespace pausegraph
