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

#include "pausegraph/driver_query.hpp"

#include "pausegraph/error.hpp"

namespace pausegraph {

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kVertexScan:
      return "vertex-scan";
    case QueryKind::kEdgeScan:
      return "edge-scan";
    case QueryKind::kBfs:
      return "bfs";
    case QueryKind::kDfs:
      return "dfs";
  }
  return "?";
}

std::optional<QueryKind> parse_query_kind(std::string_view text) {
  if (text == "vertex-scan") return QueryKind::kVertexScan;
  if (text == "edge-scan") return QueryKind::kEdgeScan;
  if (text == "bfs") return QueryKind::kBfs;
  if (text == "dfs") return QueryKind::kDfs;
  return std::nullopt;
}

std::string_view to_string(DoneReason reason) {
  return reason == DoneReason::kExhausted ? "exhausted" : "depth-bound";
}

std::optional<DoneReason> parse_done_reason(std::string_view text) {
  if (text == "exhausted") return DoneReason::kExhausted;
  if (text == "depth-bound") return DoneReason::kDepthBound;
  return std::nullopt;
}

DriverExecution::DriverExecution(const Dataset& dataset, DriverQuerySpec spec,
                                 BreakpointSet breakpoints)
    : dataset_(dataset),
      spec_(std::move(spec)),
      cls_(spec_.kind == QueryKind::kEdgeScan ? ElementClass::kEdge : ElementClass::kVertex) {
  if (spec_.is_traversal()) {
    if (!spec_.start) throw Error(ErrorCode::kInvalidSpec, "traversal requires a start vertex");
    if (!dataset_.is_live(*spec_.start)) {
      throw Error(ErrorCode::kDeadElement,
                  "start vertex " + std::to_string(spec_.start->row) + " is not live");
    }
  } else {
    if (spec_.start) throw Error(ErrorCode::kInvalidSpec, "scans do not take a start vertex");
    if (spec_.max_depth) throw Error(ErrorCode::kInvalidSpec, "scans do not take max_depth");
  }

  filter_ = dataset_.bind(spec_.filter, cls_);
  breakpoints_.reserve(breakpoints.size());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    try {
      breakpoints_.push_back(dataset_.bind(breakpoints[i], cls_));
    } catch (const Error& e) {
      throw Error(e.code(), "breakpoint " + std::to_string(i) + ": " + e.what());
    }
  }

  if (spec_.is_traversal()) {
    visited_.assign(dataset_.vertex_count(), 0);
    if (spec_.kind == QueryKind::kBfs) {
      visited_[spec_.start->row] = 1;
      queue_.push_back({*spec_.start, 0});
    } else {
      dfs_next_ = Pending{*spec_.start, 0};
    }
  }
}

bool DriverExecution::pauses_on(RowIndex row) const {
  if (!dataset_.matches(filter_, row)) return false;
  if (breakpoints_.empty()) return true;
  for (const auto& bp : breakpoints_) {
    if (dataset_.matches(bp, row)) return true;
  }
  return false;
}

bool DriverExecution::may_expand(std::uint32_t depth) const {
  return !spec_.max_depth || depth < *spec_.max_depth;
}

void DriverExecution::note_pruned(VertexId v) {
  if (pruned_by_depth_) return;
  IncidenceCursor cursor(dataset_, v, spec_.direction);
  while (auto inc = cursor.next()) {
    if (!visited_[inc->neighbor.row] && dataset_.is_live(inc->neighbor)) {
      pruned_by_depth_ = true;
      return;
    }
  }
}

MatchEvent DriverExecution::make_match(ElementRef e, std::optional<std::uint32_t> depth) const {
  return MatchEvent{e, std::string(dataset_.type_name(e)), depth};
}

PauseEvent DriverExecution::finish() {
  finished_ = true;
  queue_.clear();
  stack_.clear();
  visited_.clear();
  visited_.shrink_to_fit();
  return DoneEvent{pruned_by_depth_ ? DoneReason::kDepthBound : DoneReason::kExhausted};
}

PauseEvent DriverExecution::advance() {
  if (finished_) throw Error(ErrorCode::kSessionTerminal, "driver query already finished");
  switch (spec_.kind) {
    case QueryKind::kVertexScan:
    case QueryKind::kEdgeScan:
      return advance_scan();
    case QueryKind::kBfs:
      return advance_bfs();
    case QueryKind::kDfs:
      return advance_dfs();
  }
  return finish();
}

PauseEvent DriverExecution::advance_scan() {
  const std::size_t rows = dataset_.row_count(cls_);
  while (next_row_ < rows) {
    const RowIndex row = next_row_++;
    if (!dataset_.is_live(ElementRef{cls_, row})) continue;
    processed_.fetch_add(1, std::memory_order_relaxed);
    if (pauses_on(row)) return make_match(ElementRef{cls_, row}, std::nullopt);
  }
  return finish();
}

PauseEvent DriverExecution::advance_bfs() {
  while (!queue_.empty()) {
    const Pending current = queue_.front();
    queue_.pop_front();
    if (!dataset_.is_live(current.vertex)) continue;
    processed_.fetch_add(1, std::memory_order_relaxed);
    if (may_expand(current.depth)) {
      IncidenceCursor cursor(dataset_, current.vertex, spec_.direction);
      while (auto inc = cursor.next()) {
        const VertexId nb = inc->neighbor;
        if (visited_[nb.row] || !dataset_.is_live(nb)) continue;
        visited_[nb.row] = 1;
        queue_.push_back({nb, current.depth + 1});
      }
    } else {
      note_pruned(current.vertex);
    }
    if (pauses_on(current.vertex.row)) {
      return make_match(ElementRef::of(current.vertex), current.depth);
    }
  }
  return finish();
}

PauseEvent DriverExecution::advance_dfs() {
  for (;;) {
    if (dfs_next_) {
      const Pending current = *dfs_next_;
      dfs_next_.reset();
      if (visited_[current.vertex.row] || !dataset_.is_live(current.vertex)) continue;
      visited_[current.vertex.row] = 1;
      processed_.fetch_add(1, std::memory_order_relaxed);
      if (may_expand(current.depth)) {
        stack_.push_back(
            Frame{current.vertex, current.depth,
                  IncidenceCursor(dataset_, current.vertex, spec_.direction)});
      } else {
        note_pruned(current.vertex);
      }
      if (pauses_on(current.vertex.row)) {
        return make_match(ElementRef::of(current.vertex), current.depth);
      }
      continue;
    }
    if (stack_.empty()) return finish();
    Frame& top = stack_.back();
    auto inc = top.cursor.next();
    if (!inc) {
      stack_.pop_back();
      continue;
    }
    if (!visited_[inc->neighbor.row] && dataset_.is_live(inc->neighbor)) {
      dfs_next_ = Pending{inc->neighbor, top.depth + 1};
    }
  }
}

}  // namespace pausegraph
