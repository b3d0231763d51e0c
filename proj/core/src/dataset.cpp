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

#include "pausegraph/dataset.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "pausegraph/error.hpp"

namespace pausegraph {

namespace {

std::string element_label(ElementRef e) {
  return std::string(e.cls == ElementClass::kVertex ? "v" : "e") + std::to_string(e.row);
}

std::vector<Column> make_columns(const Schema& schema, ElementClass cls) {
  std::vector<Column> cols;
  const auto& attrs = schema.attributes(cls);
  cols.reserve(attrs.size() - 1);
  for (std::size_t i = 1; i < attrs.size(); ++i) cols.emplace_back(attrs[i].tag);
  return cols;
}

bool compare_text(std::string_view lhs, CompareOp op, const Value& rhs) {
  if (rhs.tag() != ValueTag::kText) return false;
  const std::string_view r = rhs.as_text();
  switch (op) {
    case CompareOp::kEq:
      return lhs == r;
    case CompareOp::kNe:
      return lhs != r;
    case CompareOp::kLt:
      return lhs < r;
    case CompareOp::kLe:
      return lhs <= r;
    case CompareOp::kGt:
      return lhs > r;
    case CompareOp::kGe:
      return lhs >= r;
  }
  return false;
}

void build_csr(std::size_t vertex_count, const std::vector<RowIndex>& from,
               const std::vector<RowIndex>& to, std::vector<std::size_t>& offsets,
               std::vector<Incidence>& entries) {
  offsets.assign(vertex_count + 1, 0);
  for (RowIndex v : from) ++offsets[v + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  entries.resize(from.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  // Edges are visited in ascending id order, so each list comes out sorted.
  for (std::size_t e = 0; e < from.size(); ++e) {
    entries[fill[from[e]]++] = Incidence{EdgeId{static_cast<RowIndex>(e)}, VertexId{to[e]}};
  }
}

}  // namespace

Dataset::Dataset(std::string name, Schema schema)
    : name_(std::move(name)),
      schema_(std::move(schema)),
      vertex_columns_(make_columns(schema_, ElementClass::kVertex)),
      edge_columns_(make_columns(schema_, ElementClass::kEdge)) {}

std::size_t Dataset::live_count(ElementClass cls) const noexcept {
  return cls == ElementClass::kVertex ? live_vertices_ : live_edges_;
}

bool Dataset::is_live(ElementRef e) const noexcept {
  if (!is_allocated(e)) return false;
  return (e.cls == ElementClass::kVertex ? vertex_deleted_ : edge_deleted_)[e.row] == 0;
}

void Dataset::require_allocated(ElementRef e) const {
  if (!is_allocated(e)) {
    throw Error(ErrorCode::kDeadElement, "unknown " + std::string(to_string(e.cls)) + " id " +
                                             std::to_string(e.row));
  }
}

std::string_view Dataset::type_name(ElementRef e) const {
  require_allocated(e);
  const auto& types = e.cls == ElementClass::kVertex ? vertex_types_ : edge_types_;
  return schema_.types(e.cls)[types[e.row]];
}

std::optional<Value> Dataset::get_attribute(ElementRef e, std::string_view name) const {
  require_allocated(e);
  auto idx = schema_.attribute_index(e.cls, name);
  if (!idx) {
    throw Error(ErrorCode::kInvalidSpec, "attribute '" + std::string(name) +
                                             "' is not declared for " +
                                             std::string(to_string(e.cls)) + "s");
  }
  if (!is_live(e)) return std::nullopt;
  return cell(e, *idx);
}

Value Dataset::cell(ElementRef e, std::size_t attribute) const {
  if (attribute == 0) return Value::Text(std::string(type_name(e)));
  return columns(e.cls)[attribute - 1].get(e.row);
}

std::span<const Incidence> Dataset::adjacency(VertexId v, Direction dir) const {
  const auto& offsets = dir == Direction::kIn ? in_offsets_ : out_offsets_;
  const auto& entries = dir == Direction::kIn ? in_entries_ : out_entries_;
  return std::span<const Incidence>(entries).subspan(offsets[v.row],
                                                     offsets[v.row + 1] - offsets[v.row]);
}

std::vector<Incidence> Dataset::neighbors(VertexId v, Direction dir) const {
  if (!is_live(v)) {
    throw Error(ErrorCode::kDeadElement, "vertex " + std::to_string(v.row) + " is not live");
  }
  std::vector<Incidence> out;
  auto collect = [&](Direction d) {
    for (const auto& inc : adjacency(v, d)) {
      if (edge_deleted_[inc.edge.row]) continue;
      // A self-loop already reported from the out list.
      if (dir == Direction::kBoth && d == Direction::kIn && inc.neighbor == v) continue;
      out.push_back(inc);
    }
  };
  if (dir != Direction::kIn) collect(Direction::kOut);
  if (dir != Direction::kOut) collect(Direction::kIn);
  return out;
}

std::pair<VertexId, VertexId> Dataset::endpoints(EdgeId e) const {
  if (!is_live(e)) {
    throw Error(ErrorCode::kDeadElement, "edge " + std::to_string(e.row) + " is not live");
  }
  return {source(e), target(e)};
}

std::uint64_t Dataset::delete_element(ElementRef e) {
  std::lock_guard gate(writer_gate_);
  std::unique_lock lock(mutex_);
  require_allocated(e);
  if (!is_live(e)) {
    throw Error(ErrorCode::kDeadElement, element_label(e) + " is already deleted");
  }
  auto drop_edge = [this](EdgeId edge) {
    if (!edge_deleted_[edge.row]) {
      edge_deleted_[edge.row] = 1;
      --live_edges_;
    }
  };
  if (e.cls == ElementClass::kVertex) {
    const VertexId v{e.row};
    vertex_deleted_[v.row] = 1;
    --live_vertices_;
    for (const auto& inc : adjacency(v, Direction::kOut)) drop_edge(inc.edge);
    for (const auto& inc : adjacency(v, Direction::kIn)) drop_edge(inc.edge);
  } else {
    drop_edge(EdgeId{e.row});
  }
  return version_.fetch_add(1, std::memory_order_acq_rel) + 1;
}

BoundPredicate Dataset::bind(const Predicate& p, ElementClass cls) const {
  BoundPredicate bound;
  bound.cls = cls;
  bound.terms.reserve(p.conjuncts.size());
  for (std::size_t i = 0; i < p.conjuncts.size(); ++i) {
    const auto& c = p.conjuncts[i];
    auto idx = schema_.attribute_index(cls, c.attribute);
    if (!idx) {
      throw Error(ErrorCode::kInvalidPredicate,
                  "conjunct " + std::to_string(i) + ": attribute '" + c.attribute +
                      "' is not declared for " + std::string(to_string(cls)) + "s");
    }
    const ValueTag declared = schema_.attributes(cls)[*idx].tag;
    if (c.constant.tag() != declared) {
      throw Error(ErrorCode::kInvalidPredicate,
                  "conjunct " + std::to_string(i) + ": attribute '" + c.attribute + "' is " +
                      std::string(to_string(declared)) + " but the constant is " +
                      (c.constant.tag() ? std::string(to_string(*c.constant.tag())) : "absent"));
    }
    bound.terms.push_back({*idx, c.op, c.constant});
  }
  return bound;
}

bool Dataset::matches(const BoundPredicate& p, RowIndex row) const {
  const ElementRef e{p.cls, row};
  if (!is_live(e)) return false;
  const auto& types = p.cls == ElementClass::kVertex ? vertex_types_ : edge_types_;
  const auto& cols = columns(p.cls);
  for (const auto& term : p.terms) {
    if (term.attribute == 0) {
      const std::string_view type = schema_.types(p.cls)[types[row]];
      if (!compare_text(type, term.op, term.constant)) return false;
    } else if (!cols[term.attribute - 1].compare(row, term.op, term.constant)) {
      return false;
    }
  }
  return true;
}

bool Dataset::evaluate(const Predicate& p, ElementRef e) const {
  require_allocated(e);
  return matches(bind(p, e.cls), e.row);
}

DatasetBuilder::DatasetBuilder(std::string name, Schema schema)
    : dataset_(new Dataset(std::move(name), std::move(schema))) {}

const Schema& DatasetBuilder::schema() const { return dataset_->schema_; }

void DatasetBuilder::reserve(std::size_t vertices, std::size_t edges) {
  dataset_->vertex_types_.reserve(vertices);
  for (auto& c : dataset_->vertex_columns_) c.reserve(vertices);
  dataset_->edge_types_.reserve(edges);
  dataset_->sources_.reserve(edges);
  dataset_->targets_.reserve(edges);
  for (auto& c : dataset_->edge_columns_) c.reserve(edges);
}

namespace {

std::vector<Value> to_cells(const Schema& schema, ElementClass cls, std::size_t row,
                            const AttributeAssignments& attributes) {
  std::vector<Value> cells(schema.attributes(cls).size());
  for (const auto& [name, value] : attributes) {
    auto idx = schema.attribute_index(cls, name);
    if (!idx || *idx == 0) {
      throw Error(ErrorCode::kInvalidSpec, std::string(to_string(cls)) + " row " +
                                               std::to_string(row) + ": attribute '" + name +
                                               "' is not declared in the schema");
    }
    cells[*idx] = value;
  }
  return cells;
}

std::size_t require_type(const Schema& schema, ElementClass cls, std::size_t row,
                         std::string_view type) {
  auto idx = schema.type_index(cls, type);
  if (!idx) {
    throw Error(ErrorCode::kInvalidSpec, std::string(to_string(cls)) + " row " +
                                             std::to_string(row) + ": unknown type '" +
                                             std::string(type) + "'");
  }
  return *idx;
}

void append_cells(const Schema& schema, ElementClass cls, std::size_t row,
                  std::span<const Value> cells, std::vector<Column>& columns) {
  const auto& attrs = schema.attributes(cls);
  if (cells.size() != attrs.size()) {
    throw Error(ErrorCode::kInvalidSpec, std::string(to_string(cls)) + " row " +
                                             std::to_string(row) + ": expected " +
                                             std::to_string(attrs.size()) + " cells, got " +
                                             std::to_string(cells.size()));
  }
  for (std::size_t i = 1; i < attrs.size(); ++i) {
    const auto& v = cells[i];
    if (!v.is_absent() && v.tag() != attrs[i].tag) {
      throw Error(ErrorCode::kInvalidSpec,
                  std::string(to_string(cls)) + " row " + std::to_string(row) + ": attribute '" +
                      attrs[i].name + "' expects " + std::string(to_string(attrs[i].tag)) +
                      " but got " + std::string(to_string(*v.tag())));
    }
  }
  for (std::size_t i = 1; i < attrs.size(); ++i) columns[i - 1].append(cells[i]);
}

void check_capacity(std::size_t rows, ElementClass cls) {
  if (rows >= std::numeric_limits<RowIndex>::max()) {
    throw Error(ErrorCode::kInvalidSpec,
                "too many " + std::string(to_string(cls)) + " rows for 32-bit ids");
  }
}

}  // namespace

VertexId DatasetBuilder::add_vertex(const VertexRecord& record) {
  const std::size_t row = dataset_->vertex_count();
  const auto type = require_type(schema(), ElementClass::kVertex, row, record.type);
  const auto cells = to_cells(schema(), ElementClass::kVertex, row, record.attributes);
  return add_vertex(type, cells);
}

EdgeId DatasetBuilder::add_edge(const EdgeRecord& record) {
  const std::size_t row = dataset_->edge_count();
  const auto type = require_type(schema(), ElementClass::kEdge, row, record.type);
  const auto cells = to_cells(schema(), ElementClass::kEdge, row, record.attributes);
  return add_edge(type, record.source, record.target, cells);
}

VertexId DatasetBuilder::add_vertex(std::size_t type_index, std::span<const Value> cells) {
  auto& d = *dataset_;
  const std::size_t row = d.vertex_count();
  check_capacity(row, ElementClass::kVertex);
  if (type_index >= d.schema_.types(ElementClass::kVertex).size()) {
    throw Error(ErrorCode::kInvalidSpec, "vertex row " + std::to_string(row) + ": bad type index");
  }
  append_cells(d.schema_, ElementClass::kVertex, row, cells, d.vertex_columns_);
  d.vertex_types_.push_back(static_cast<std::uint16_t>(type_index));
  return VertexId{static_cast<RowIndex>(row)};
}

EdgeId DatasetBuilder::add_edge(std::size_t type_index, RowIndex source, RowIndex target,
                                std::span<const Value> cells) {
  auto& d = *dataset_;
  const std::size_t row = d.edge_count();
  check_capacity(row, ElementClass::kEdge);
  if (type_index >= d.schema_.types(ElementClass::kEdge).size()) {
    throw Error(ErrorCode::kInvalidSpec, "edge row " + std::to_string(row) + ": bad type index");
  }
  append_cells(d.schema_, ElementClass::kEdge, row, cells, d.edge_columns_);
  d.edge_types_.push_back(static_cast<std::uint16_t>(type_index));
  d.sources_.push_back(source);
  d.targets_.push_back(target);
  return EdgeId{static_cast<RowIndex>(row)};
}

std::shared_ptr<Dataset> DatasetBuilder::build() && {
  auto& d = *dataset_;
  const std::size_t n = d.vertex_count();
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (d.sources_[e] >= n || d.targets_[e] >= n) {
      const RowIndex bad = d.sources_[e] >= n ? d.sources_[e] : d.targets_[e];
      throw Error(ErrorCode::kDanglingEdge, "edge row " + std::to_string(e) +
                                                " references missing vertex row " +
                                                std::to_string(bad));
    }
  }
  build_csr(n, d.sources_, d.targets_, d.out_offsets_, d.out_entries_);
  build_csr(n, d.targets_, d.sources_, d.in_offsets_, d.in_entries_);
  d.vertex_deleted_.assign(n, 0);
  d.edge_deleted_.assign(d.edge_count(), 0);
  d.live_vertices_ = n;
  d.live_edges_ = d.edge_count();
  return std::shared_ptr<Dataset>(dataset_.release());
}

std::shared_ptr<Dataset> load_dataset(std::string name, Schema schema,
                                      std::span<const VertexRecord> vertices,
                                      std::span<const EdgeRecord> edges) {
  DatasetBuilder builder(std::move(name), std::move(schema));
  builder.reserve(vertices.size(), edges.size());
  for (const auto& v : vertices) builder.add_vertex(v);
  for (const auto& e : edges) builder.add_edge(e);
  return std::move(builder).build();
}

IncidenceCursor::IncidenceCursor(const Dataset& dataset, VertexId v, Direction dir)
    : dataset_(&dataset) {
  if (dir != Direction::kIn) out_ = dataset.adjacency(v, Direction::kOut);
  if (dir != Direction::kOut) in_ = dataset.adjacency(v, Direction::kIn);
}

std::optional<Incidence> IncidenceCursor::next() {
  for (;;) {
    const bool has_out = out_pos_ < out_.size();
    const bool has_in = in_pos_ < in_.size();
    if (!has_out && !has_in) return std::nullopt;
    Incidence pick;
    if (has_out && has_in && out_[out_pos_].edge == in_[in_pos_].edge) {
      // Self-loop seen from both sides.
      pick = out_[out_pos_++];
      ++in_pos_;
    } else if (has_out && (!has_in || out_[out_pos_].edge < in_[in_pos_].edge)) {
      pick = out_[out_pos_++];
    } else {
      pick = in_[in_pos_++];
    }
    if (dataset_->is_live(pick.edge)) return pick;
  }
}

}  // namespace pausegraph
