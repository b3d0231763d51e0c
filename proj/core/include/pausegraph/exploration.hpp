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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pausegraph/dataset.hpp"
#include "pausegraph/ids.hpp"
#include "pausegraph/predicate.hpp"

namespace pausegraph {

// Caps a single expansion so one hub vertex cannot flood the client.
inline constexpr std::uint32_t kDefaultExpansionLimit = 1000;

struct ExpansionRequest {
  VertexId vertex;
  Direction direction = Direction::kOut;
  std::optional<Predicate> edge_filter;
  std::optional<Predicate> vertex_filter;
  // Must be positive when set; kDefaultExpansionLimit otherwise.
  std::optional<std::uint32_t> limit;

  bool operator==(const ExpansionRequest&) const = default;
};

struct DeltaVertex {
  VertexId id;
  std::string type;
  bool operator==(const DeltaVertex&) const = default;
};

struct DeltaEdge {
  EdgeId id;
  std::string type;
  VertexId source;
  VertexId target;
  bool operator==(const DeltaEdge&) const = default;
};

/// Edges found by one expansion plus their far endpoints (the expanded
/// vertex itself is not repeated). Edges ascend by id; vertices appear in
/// order of first reference.
struct SubgraphDelta {
  std::vector<DeltaVertex> vertices;
  std::vector<DeltaEdge> edges;
  bool truncated = false;
  bool operator==(const SubgraphDelta&) const = default;
};

using AttributeMap = std::map<std::string, Value, std::less<>>;

struct AttributeFetchResult {
  struct Entry {
    ElementRef element;
    AttributeMap attributes;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> values;
  // Requested elements that are deleted; never also present in `values`.
  std::vector<ElementRef> deleted;
  bool operator==(const AttributeFetchResult&) const = default;
};

struct EndpointInfo {
  VertexId id;
  std::string type;
  bool operator==(const EndpointInfo&) const = default;
};

// All operations below expect the caller to hold the dataset read lock.

/// Live incident edges of `req.vertex` in `req.direction` whose attributes
/// satisfy `edge_filter` and whose far endpoint satisfies `vertex_filter`,
/// ascending by EdgeId and cut at the limit.
/// Throws kDeadElement, kInvalidPredicate, or kInvalidSpec (limit 0).
SubgraphDelta expand_neighborhood(const Dataset& dataset, const ExpansionRequest& req);

/// Exact size of the unlimited expansion; `req.limit` is ignored.
std::uint64_t estimate_expansion(const Dataset& dataset, const ExpansionRequest& req);

// Throws kDeadElement for deleted or unknown edges.
std::pair<EndpointInfo, EndpointInfo> incident_vertices(const Dataset& dataset, EdgeId edge);

/// Every name must be declared for every requested element's class
/// (kInvalidSpec otherwise); deleted elements become warnings.
AttributeFetchResult fetch_attributes(const Dataset& dataset, std::span<const ElementRef> elements,
                                      std::span<const std::string> names);

}  // namespace pausegraph
