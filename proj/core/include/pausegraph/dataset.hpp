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
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pausegraph/column.hpp"
#include "pausegraph/ids.hpp"
#include "pausegraph/predicate.hpp"
#include "pausegraph/schema.hpp"
#include "pausegraph/value.hpp"

namespace pausegraph {

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
  bool operator==(const Incidence&) const = default;
};

using AttributeAssignments = std::vector<std::pair<std::string, Value>>;

struct VertexRecord {
  std::string type;
  AttributeAssignments attributes;
};

struct EdgeRecord {
  std::string type;
  RowIndex source = 0;
  RowIndex target = 0;
  AttributeAssignments attributes;
};

/// In-memory property graph.
///
/// Storage is two column groups (one per element class) with one Column per
/// declared attribute, a dictionary-encoded type column, the edge list as
/// source/target columns, and a CSR adjacency index per direction whose
/// lists are sorted ascending by EdgeId. Deletion only sets tombstones and
/// bumps `version()`.
///
/// Thread-safety: read accessors do not lock. Callers sharing a dataset with
/// writers hold `read_lock()` for the duration of a read operation;
/// `delete_element` takes the exclusive lock itself. A pending delete stops
/// new readers from entering, so a steady stream of reads cannot starve it.
/// read_lock() is not reentrant.
class Dataset {
 public:
  Dataset(const Dataset&) = delete;
  Dataset& operator=(const Dataset&) = delete;

  const std::string& name() const noexcept { return name_; }
  const Schema& schema() const noexcept { return schema_; }

  std::size_t vertex_count() const noexcept { return vertex_types_.size(); }
  std::size_t edge_count() const noexcept { return edge_types_.size(); }
  std::size_t row_count(ElementClass cls) const noexcept {
    return cls == ElementClass::kVertex ? vertex_count() : edge_count();
  }
  std::size_t live_count(ElementClass cls) const noexcept;
  std::uint64_t version() const noexcept { return version_.load(std::memory_order_acquire); }

  std::shared_lock<std::shared_mutex> read_lock() const {
    std::lock_guard gate(writer_gate_);
    return std::shared_lock(mutex_);
  }

  bool is_allocated(ElementRef e) const noexcept { return e.row < row_count(e.cls); }
  bool is_live(ElementRef e) const noexcept;
  bool is_live(VertexId v) const noexcept { return is_live(ElementRef::of(v)); }
  bool is_live(EdgeId e) const noexcept { return is_live(ElementRef::of(e)); }

  // Type name of an allocated element, deleted or not.
  std::string_view type_name(ElementRef e) const;

  /// Stored value (absent when unset). std::nullopt signals that the element
  /// has been deleted; that is a warning, not an error.
  /// Throws kInvalidSpec for an undeclared name, kDeadElement for an id that
  /// was never allocated.
  std::optional<Value> get_attribute(ElementRef e, std::string_view name) const;

  // Unchecked cell read by attribute index; index 0 yields the type name.
  Value cell(ElementRef e, std::size_t attribute) const;

  /// Live incident edges of a live vertex, ascending by EdgeId within each
  /// direction. kBoth is the out list followed by the in list, with self-loops
  /// reported once.
  std::vector<Incidence> neighbors(VertexId v, Direction dir) const;

  // Raw adjacency list (kOut or kIn), tombstoned edges included.
  std::span<const Incidence> adjacency(VertexId v, Direction dir) const;

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId source(EdgeId e) const { return VertexId{sources_[e.row]}; }
  VertexId target(EdgeId e) const { return VertexId{targets_[e.row]}; }

  /// Tombstones `e` (and, for vertices, every incident edge) and returns the
  /// new version. Throws kDeadElement for double deletes and unknown ids.
  std::uint64_t delete_element(ElementRef e);

  /// Resolves `p` against the schema of `cls`. Throws kInvalidPredicate
  /// naming the conjunct index for undeclared attributes or tag mismatches.
  BoundPredicate bind(const Predicate& p, ElementClass cls) const;
  // False for deleted rows.
  bool matches(const BoundPredicate& p, RowIndex row) const;
  bool evaluate(const Predicate& p, ElementRef e) const;

 private:
  friend class DatasetBuilder;
  Dataset(std::string name, Schema schema);

  const std::vector<Column>& columns(ElementClass cls) const {
    return cls == ElementClass::kVertex ? vertex_columns_ : edge_columns_;
  }
  void require_allocated(ElementRef e) const;

  std::string name_;
  Schema schema_;

  std::vector<std::uint16_t> vertex_types_;
  std::vector<std::uint16_t> edge_types_;
  // Column i holds attribute i + 1 of the schema (attribute 0 is "type").
  std::vector<Column> vertex_columns_;
  std::vector<Column> edge_columns_;

  std::vector<RowIndex> sources_;
  std::vector<RowIndex> targets_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Incidence> out_entries_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Incidence> in_entries_;

  std::vector<std::uint8_t> vertex_deleted_;
  std::vector<std::uint8_t> edge_deleted_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;

  std::atomic<std::uint64_t> version_{0};
  mutable std::shared_mutex mutex_;
  // Held by a writer while it waits for and holds mutex_.
  mutable std::mutex writer_gate_;
};

/// Streams rows into a new dataset. Rows are validated as they arrive;
/// dangling edge endpoints are reported by build() since edges may precede
/// the vertices they reference.
class DatasetBuilder {
 public:
  DatasetBuilder(std::string name, Schema schema);

  const Schema& schema() const;
  void reserve(std::size_t vertices, std::size_t edges);

  VertexId add_vertex(const VertexRecord& record);
  EdgeId add_edge(const EdgeRecord& record);

  // Positional forms used by bulk loaders: `cells` is aligned with the
  // schema's attribute list; cells[0] (the type slot) is ignored.
  VertexId add_vertex(std::size_t type_index, std::span<const Value> cells);
  EdgeId add_edge(std::size_t type_index, RowIndex source, RowIndex target,
                  std::span<const Value> cells);

  std::shared_ptr<Dataset> build() &&;

 private:
  std::unique_ptr<Dataset> dataset_;
};

std::shared_ptr<Dataset> load_dataset(std::string name, Schema schema,
                                      std::span<const VertexRecord> vertices,
                                      std::span<const EdgeRecord> edges);

/// Iterates the live incident edges of one vertex ascending by EdgeId. For
/// kBoth the out and in lists are merged, and a self-loop appears once.
/// Holds views into the dataset; it must not outlive it.
class IncidenceCursor {
 public:
  IncidenceCursor(const Dataset& dataset, VertexId v, Direction dir);

  std::optional<Incidence> next();

 private:
  const Dataset* dataset_;
  std::span<const Incidence> out_;
  std::span<const Incidence> in_;
  std::size_t out_pos_ = 0;
  std::size_t in_pos_ = 0;
};

}  // namespace pausegraph
