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

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pausegraph/dataset.hpp"
#include "pausegraph/error.hpp"

namespace pausegraph {
namespace {

using pgtest::load_g0;

std::vector<std::pair<RowIndex, RowIndex>> rows(const std::vector<Incidence>& list) {
  std::vector<std::pair<RowIndex, RowIndex>> out;
  for (const auto& i : list) out.emplace_back(i.edge.row, i.neighbor.row);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

TEST(Dataset, G0Shape) {
  auto d = load_g0();
  EXPECT_EQ(d->name(), "g0");
  EXPECT_EQ(d->vertex_count(), 5u);
  EXPECT_EQ(d->edge_count(), 5u);
  EXPECT_EQ(d->version(), 0u);
  using P = std::vector<std::pair<RowIndex, RowIndex>>;
  EXPECT_EQ(rows(d->neighbors(VertexId{0}, Direction::kOut)), (P{{0, 1}, {2, 2}}));
  EXPECT_EQ(rows(d->neighbors(VertexId{4}, Direction::kOut)), P{});
  EXPECT_EQ(rows(d->neighbors(VertexId{2}, Direction::kIn)), (P{{1, 1}, {2, 0}}));
  EXPECT_EQ(rows(d->neighbors(VertexId{2}, Direction::kBoth)), (P{{3, 3}, {1, 1}, {2, 0}}));
}

TEST(Dataset, G0Attributes) {
  auto d = load_g0();
  EXPECT_EQ(d->get_attribute(ElementRef::of(VertexId{1}), "age"), Value::Int(25));
  auto name = d->get_attribute(ElementRef::of(VertexId{0}), "name");
  ASSERT_TRUE(name.has_value());
  EXPECT_TRUE(name->is_absent());
  EXPECT_EQ(d->get_attribute(ElementRef::of(VertexId{0}), "type"), Value::Text("person"));
  EXPECT_EQ(code_of([&] { d->get_attribute(ElementRef::of(VertexId{0}), "height"); }),
            ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([&] { d->get_attribute(ElementRef::of(VertexId{9}), "age"); }),
            ErrorCode::kDeadElement);
}

TEST(Dataset, DeletedElementYieldsWarningNotError) {
  auto d = load_g0();
  d->delete_element(ElementRef::of(VertexId{1}));
  EXPECT_FALSE(d->get_attribute(ElementRef::of(VertexId{1}), "age").has_value());
}

TEST(Dataset, Endpoints) {
  auto d = load_g0();
  EXPECT_EQ(d->endpoints(EdgeId{1}), std::make_pair(VertexId{1}, VertexId{2}));
  EXPECT_EQ(d->endpoints(EdgeId{0}), std::make_pair(VertexId{0}, VertexId{1}));
  d->delete_element(ElementRef::of(EdgeId{0}));
  EXPECT_EQ(code_of([&] { d->endpoints(EdgeId{0}); }), ErrorCode::kDeadElement);
  EXPECT_EQ(code_of([&] { d->endpoints(EdgeId{77}); }), ErrorCode::kDeadElement);
}

TEST(Dataset, DeleteEdgeHidesItFromAdjacency) {
  auto d = load_g0();
  d->delete_element(ElementRef::of(EdgeId{0}));
  using P = std::vector<std::pair<RowIndex, RowIndex>>;
  EXPECT_EQ(rows(d->neighbors(VertexId{0}, Direction::kOut)), (P{{2, 2}}));
}

TEST(Dataset, DeleteVertexCascadesToIncidentEdges) {
  auto d = load_g0();
  EXPECT_EQ(d->delete_element(ElementRef::of(VertexId{2})), 1u);
  EXPECT_EQ(d->version(), 1u);
  for (RowIndex e : {1u, 2u, 3u}) EXPECT_FALSE(d->is_live(EdgeId{e})) << e;
  for (RowIndex e : {0u, 4u}) EXPECT_TRUE(d->is_live(EdgeId{e})) << e;
  EXPECT_EQ(d->live_count(ElementClass::kVertex), 4u);
  EXPECT_EQ(d->live_count(ElementClass::kEdge), 2u);
  EXPECT_EQ(code_of([&] { d->delete_element(ElementRef::of(VertexId{2})); }),
            ErrorCode::kDeadElement);
  EXPECT_EQ(d->version(), 1u);
  EXPECT_EQ(code_of([&] { d->neighbors(VertexId{2}, Direction::kOut); }), ErrorCode::kDeadElement);
}

TEST(Dataset, DeleteIsolatedEdge) {
  auto d = load_g0();
  d->delete_element(ElementRef::of(EdgeId{4}));
  for (RowIndex e = 0; e < 4; ++e) EXPECT_TRUE(d->is_live(EdgeId{e}));
  EXPECT_FALSE(d->is_live(EdgeId{4}));
  for (RowIndex v = 0; v < 5; ++v) EXPECT_TRUE(d->is_live(VertexId{v}));
}

TEST(Dataset, DeleteOutOfRange) {
  auto d = load_g0();
  EXPECT_EQ(code_of([&] { d->delete_element(ElementRef::of(VertexId{5})); }), ErrorCode::kDeadElement);
  EXPECT_EQ(d->version(), 0u);
}

TEST(Dataset, EmptyLoad) {
  auto d = load_dataset("empty", Schema(), {}, {});
  EXPECT_EQ(d->vertex_count(), 0u);
  EXPECT_EQ(d->edge_count(), 0u);
}

TEST(Dataset, DanglingEndpointNamesTheEdge) {
  const Schema& s = pgtest::g0_schema();
  std::vector<VertexRecord> vs(5, VertexRecord{"person", {}});
  std::vector<EdgeRecord> es = {{"knows", 0, 1, {}}, {"knows", 1, 99, {}}};
  try {
    load_dataset("bad", s, vs, es);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingEdge);
    EXPECT_NE(std::string(e.what()).find("edge row 1"), std::string::npos) << e.what();
  }
}

TEST(Dataset, SchemaMismatchNamesRowAndAttribute) {
  const Schema& s = pgtest::g0_schema();
  std::vector<VertexRecord> vs = {{"person", {{"age", Value::Int(3)}}},
                                  {"person", {{"age", Value::Text("old")}}}};
  try {
    load_dataset("bad", s, vs, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSpec);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("age"), std::string::npos) << msg;
  }
  EXPECT_THROW(load_dataset("bad", s, std::vector<VertexRecord>{{"robot", {}}}, {}), Error);
  EXPECT_THROW(load_dataset("bad", s, std::vector<VertexRecord>{{"person", {{"height", Value::Int(1)}}}}, {}),
               Error);
}

// Adjacency must agree with a scan of the edge list, for every vertex and
// direction, before and after deletions.
TEST(DatasetProperty, AdjacencyMatchesEdgeListScan) {
  pgtest::Gen gen(11);
  for (int round = 0; round < 30; ++round) {
    auto g = gen.graph({60, 1000, 1});
    auto d = g.build();
    pgtest::Reference ref(g);
    auto check = [&] {
      for (RowIndex v = 0; v < d->vertex_count(); ++v) {
        if (!d->is_live(VertexId{v})) continue;
        EXPECT_EQ(rows(d->neighbors(VertexId{v}, Direction::kOut)), ref.incident(v, Direction::kOut));
        EXPECT_EQ(rows(d->neighbors(VertexId{v}, Direction::kIn)), ref.incident(v, Direction::kIn));
        EXPECT_EQ(rows(d->neighbors(VertexId{v}, Direction::kBoth)), ref.neighbors_concat(v));
        std::vector<std::pair<RowIndex, RowIndex>> merged;
        IncidenceCursor cur(*d, VertexId{v}, Direction::kBoth);
        while (auto i = cur.next()) merged.emplace_back(i->edge.row, i->neighbor.row);
        EXPECT_EQ(merged, ref.incident(v, Direction::kBoth));
      }
    };
    check();
    std::uint64_t version = d->version();
    for (int k = 0; k < 5; ++k) {
      const bool vertex = gen.coin(0.4);
      const auto cls = vertex ? ElementClass::kVertex : ElementClass::kEdge;
      if (d->row_count(cls) == 0) continue;
      const RowIndex r = static_cast<RowIndex>(gen.index(d->row_count(cls)));
      if (!d->is_live(ElementRef{cls, r})) continue;
      d->delete_element(ElementRef{cls, r});
      ref.kill(cls, r);
      EXPECT_GT(d->version(), version);
      version = d->version();
    }
    check();
  }
}

TEST(DatasetProperty, ValuesStableAcrossUnrelatedDeletes) {
  pgtest::Gen gen(5);
  auto g = gen.graph({200, 800, 50});
  auto d = g.build();
  const auto& attrs = d->schema().attributes(ElementClass::kVertex);
  std::vector<std::vector<Value>> before;
  for (RowIndex v = 0; v < d->vertex_count(); ++v) {
    std::vector<Value> row;
    for (const auto& a : attrs) row.push_back(*d->get_attribute(ElementRef::of(VertexId{v}), a.name));
    before.push_back(row);
  }
  std::vector<bool> deleted(d->vertex_count(), false);
  for (int k = 0; k < 20; ++k) {
    const RowIndex r = static_cast<RowIndex>(gen.index(d->vertex_count()));
    if (deleted[r]) continue;
    d->delete_element(ElementRef::of(VertexId{r}));
    deleted[r] = true;
  }
  for (RowIndex v = 0; v < d->vertex_count(); ++v) {
    if (deleted[v]) continue;
    for (std::size_t a = 0; a < attrs.size(); ++a) {
      EXPECT_EQ(*d->get_attribute(ElementRef::of(VertexId{v}), attrs[a].name), before[v][a]);
    }
  }
}

TEST(DatasetConcurrency, ReadersAndDeleterDoNotRace) {
  pgtest::Gen gen(3);
  auto g = gen.graph({500, 3000, 400});
  auto d = g.build();
  std::atomic<bool> done{false};
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      while (!done.load()) {
        auto lock = d->read_lock();
        for (RowIndex v = 0; v < d->vertex_count(); ++v) {
          if (!d->is_live(VertexId{v})) continue;
          for (const auto& inc : d->neighbors(VertexId{v}, Direction::kBoth)) {
            ASSERT_TRUE(d->is_live(inc.edge));
            ASSERT_TRUE(d->is_live(inc.neighbor));
          }
        }
      }
    });
  }
  for (RowIndex v = 0; v < 100; ++v) d->delete_element(ElementRef::of(VertexId{v}));
  done = true;
  for (auto& t : readers) t.join();
  EXPECT_EQ(d->version(), 100u);
}

}  // namespace
}  // namespace pausegraph
