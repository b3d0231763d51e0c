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

#include <atomic>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pausegraph/dataset.hpp"
#include "pausegraph/ids.hpp"
#include "pausegraph/predicate.hpp"

namespace pausegraph {

enum class QueryKind : std::uint8_t { kVertexScan, kEdgeScan, kBfs, kDfs };

std::string_view to_string(QueryKind kind);
std::optional<QueryKind> parse_query_kind(std::string_view text);

struct DriverQuerySpec {
  QueryKind kind = QueryKind::kVertexScan;
  Predicate filter;
  // Traversals only.
  std::optional<VertexId> start;
  Direction direction = Direction::kOut;
  std::optional<std::uint32_t> max_depth;

  bool is_traversal() const noexcept { return kind == QueryKind::kBfs || kind == QueryKind::kDfs; }
  bool operator==(const DriverQuerySpec&) const = default;
};

// An empty set pauses on every record of the filtered stream.
using BreakpointSet = std::vector<Predicate>;

struct MatchEvent {
  ElementRef element;
  std::string type;
  std::optional<std::uint32_t> depth;
  bool operator==(const MatchEvent&) const = default;
};

enum class DoneReason : std::uint8_t { kExhausted, kDepthBound };

std::string_view to_string(DoneReason reason);
std::optional<DoneReason> parse_done_reason(std::string_view text);

struct DoneEvent {
  DoneReason reason = DoneReason::kExhausted;
  bool operator==(const DoneEvent&) const = default;
};

using PauseEvent = std::variant<MatchEvent, DoneEvent>;

inline bool is_match(const PauseEvent& ev) { return std::holds_alternative<MatchEvent>(ev); }

/// The suspended state of one driver query.
///
/// advance() runs until the next record satisfying
/// `filter AND (any breakpoint)` and returns it, or reports completion.
/// Nothing past the pause point is examined.
///
///  - scans visit rows ascending by id, skipping tombstones;
///  - bfs dequeues FIFO, enqueues neighbors ascending by EdgeId and marks
///    vertices visited on enqueue;
///  - dfs yields the preorder of a recursive DFS that follows neighbors
///    ascending by EdgeId. Frames keep an adjacency cursor, so the stack never
///    holds more than one entry per vertex.
///
/// Traversal filters and breakpoints apply to vertices only. They suppress
/// pauses but never prune expansion.
///
/// Not thread-safe; the caller holds the dataset read lock around advance().
/// records_processed() may be read concurrently.
class DriverExecution {
 public:
  /// Validates `spec` and `breakpoints` against the dataset schema.
  /// Throws kInvalidSpec, kInvalidPredicate, or kDeadElement (dead start).
  DriverExecution(const Dataset& dataset, DriverQuerySpec spec, BreakpointSet breakpoints);

  PauseEvent advance();

  std::uint64_t records_processed() const noexcept {
    return processed_.load(std::memory_order_relaxed);
  }
  bool finished() const noexcept { return finished_; }

 private:
  struct Pending {
    VertexId vertex;
    std::uint32_t depth;
  };
  struct Frame {
    VertexId vertex;
    std::uint32_t depth;
    IncidenceCursor cursor;
  };

  bool pauses_on(RowIndex row) const;
  bool may_expand(std::uint32_t depth) const;
  void note_pruned(VertexId v);
  MatchEvent make_match(ElementRef e, std::optional<std::uint32_t> depth) const;
  PauseEvent finish();
  PauseEvent advance_scan();
  PauseEvent advance_bfs();
  PauseEvent advance_dfs();

  const Dataset& dataset_;
  DriverQuerySpec spec_;
  ElementClass cls_;
  BoundPredicate filter_;
  std::vector<BoundPredicate> breakpoints_;

  RowIndex next_row_ = 0;
  std::vector<std::uint8_t> visited_;
  std::deque<Pending> queue_;
  std::vector<Frame> stack_;
  std::optional<Pending> dfs_next_;
  bool pruned_by_depth_ = false;

  std::atomic<std::uint64_t> processed_{0};
  bool finished_ = false;
};

}  // namespace pausegraph
