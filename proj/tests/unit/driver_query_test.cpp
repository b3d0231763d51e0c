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

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pausegraph/driver_query.hpp"
#include "pausegraph/error.hpp"

namespace pausegraph {
namespace {

using pgtest::RefEvent;

Predicate age_gt(std::int64_t v) { return Predicate{}.where("age", CompareOp::kGt, Value::Int(v)); }

DriverQuerySpec scan(QueryKind kind = QueryKind::kVertexScan, Predicate filter = {}) {
  DriverQuerySpec s;
  s.kind = kind;
  s.filter = std::move(filter);
  return s;
}

DriverQuerySpec traversal(QueryKind kind, RowIndex start, Direction dir,
                          std::optional<std::uint32_t> depth = std::nullopt) {
  DriverQuerySpec s;
  s.kind = kind;
  s.start = VertexId{start};
  s.direction = dir;
  s.max_depth = depth;
  return s;
}

ErrorCode construct_error(const Dataset& d, const DriverQuerySpec& spec, const BreakpointSet& bps = {}) {
  try {
    DriverExecution exec(d, spec, bps);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected construction to fail";
  return ErrorCode::kIoError;
}

TEST(DriverQuery, ScanWithBreakpointOnG0) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(), {age_gt(21)});
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{1, {}}, {2, {}}, {3, {}}}));
  EXPECT_EQ(run.reason, DoneReason::kExhausted);
  EXPECT_EQ(run.processed_at_match, (std::vector<std::uint64_t>{2, 3, 4}));
  EXPECT_EQ(run.processed_total, 5u);
}

TEST(DriverQuery, MatchEventCarriesType) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(QueryKind::kEdgeScan), {});
  auto ev = exec.advance();
  ASSERT_TRUE(is_match(ev));
  const auto& m = std::get<MatchEvent>(ev);
  EXPECT_EQ(m.element, ElementRef::of(EdgeId{0}));
  EXPECT_EQ(m.type, "knows");
  EXPECT_FALSE(m.depth.has_value());
}

TEST(DriverQuery, FilterAloneDrivesPauses) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(QueryKind::kVertexScan, age_gt(21)), {});
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches.size(), 3u);
}

TEST(DriverQuery, AnyBreakpointPauses) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(), {age_gt(28), Predicate{}.where("age", CompareOp::kLt, Value::Int(20))});
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{2, {}}, {4, {}}}));
}

TEST(DriverQuery, BfsOnG0) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, traversal(QueryKind::kBfs, 0, Direction::kOut), {});
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 3}}));
  EXPECT_EQ(run.reason, DoneReason::kExhausted);
}

TEST(DriverQuery, DfsOnG0) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, traversal(QueryKind::kDfs, 0, Direction::kOut), {});
  auto run = pgtest::drain(exec);
  // e0 leads to v1, whose e1 reaches v2 before e2 is considered.
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}));
}

TEST(DriverQuery, DepthBoundIsReported) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, traversal(QueryKind::kBfs, 0, Direction::kOut, 1), {});
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{0, 0}, {1, 1}, {2, 1}}));
  EXPECT_EQ(run.reason, DoneReason::kDepthBound);

  DriverExecution whole(*d, traversal(QueryKind::kBfs, 0, Direction::kOut, 3), {});
  EXPECT_EQ(pgtest::drain(whole).reason, DoneReason::kExhausted);
}

TEST(DriverQuery, InAndBothDirections) {
  auto d = pgtest::load_g0();
  DriverExecution in(*d, traversal(QueryKind::kBfs, 4, Direction::kIn), {});
  EXPECT_EQ(pgtest::drain(in).matches, (std::vector<RefEvent>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 3}}));
  DriverExecution both(*d, traversal(QueryKind::kBfs, 2, Direction::kBoth), {});
  // Ascending edge ids across both lists: e1 (v1), e2 (v0), e3 (v3).
  EXPECT_EQ(pgtest::drain(both).matches, (std::vector<RefEvent>{{2, 0}, {1, 1}, {0, 1}, {3, 1}, {4, 2}}));
}

TEST(DriverQuery, EmptyDatasetIsImmediatelyDone) {
  auto d = load_dataset("empty", pgtest::g0_schema(), {}, {});
  for (auto kind : {QueryKind::kVertexScan, QueryKind::kEdgeScan}) {
    DriverExecution exec(*d, scan(kind), {});
    auto ev = exec.advance();
    ASSERT_FALSE(is_match(ev));
    EXPECT_EQ(std::get<DoneEvent>(ev).reason, DoneReason::kExhausted);
    EXPECT_TRUE(exec.finished());
  }
}

TEST(DriverQuery, AdvanceAfterDoneFails) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(QueryKind::kVertexScan, age_gt(100)), {});
  EXPECT_FALSE(is_match(exec.advance()));
  try {
    exec.advance();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSessionTerminal);
  }
}

TEST(DriverQuery, SpecValidation) {
  auto d = pgtest::load_g0();
  DriverQuerySpec bfs_no_start;
  bfs_no_start.kind = QueryKind::kBfs;
  EXPECT_EQ(construct_error(*d, bfs_no_start), ErrorCode::kInvalidSpec);

  auto scan_with_start = scan();
  scan_with_start.start = VertexId{0};
  EXPECT_EQ(construct_error(*d, scan_with_start), ErrorCode::kInvalidSpec);

  auto scan_with_depth = scan();
  scan_with_depth.max_depth = 2;
  EXPECT_EQ(construct_error(*d, scan_with_depth), ErrorCode::kInvalidSpec);

  EXPECT_EQ(construct_error(*d, traversal(QueryKind::kDfs, 9, Direction::kOut)), ErrorCode::kDeadElement);
  d->delete_element(ElementRef::of(VertexId{0}));
  EXPECT_EQ(construct_error(*d, traversal(QueryKind::kDfs, 0, Direction::kOut)), ErrorCode::kDeadElement);

  EXPECT_EQ(construct_error(*d, scan(QueryKind::kVertexScan, Predicate{}.where("nope", CompareOp::kEq, Value::Int(1)))),
            ErrorCode::kInvalidPredicate);
  try {
    DriverExecution exec(*d, scan(), {age_gt(1), Predicate{}.where("age", CompareOp::kEq, Value::Text("x"))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPredicate);
    EXPECT_NE(std::string(e.what()).find("breakpoint 1"), std::string::npos) << e.what();
  }
}

TEST(DriverQuery, DeletionWhilePausedSkipsTombstones) {
  auto d = pgtest::load_g0();
  DriverExecution exec(*d, scan(), {});
  auto first = exec.advance();
  EXPECT_EQ(std::get<MatchEvent>(first).element.row, 0u);
  d->delete_element(ElementRef::of(VertexId{1}));
  d->delete_element(ElementRef::of(VertexId{0}));
  auto run = pgtest::drain(exec);
  EXPECT_EQ(run.matches, (std::vector<RefEvent>{{2, {}}, {3, {}}, {4, {}}}));
  EXPECT_EQ(run.processed_total, 4u);
}

// Scans pause exactly where the ascending filtered scan says they should.
TEST(DriverQueryProperty, ScansMatchOracle) {
  pgtest::Gen gen(101);
  for (int round = 0; round < 40; ++round) {
    auto g = gen.graph({300, 1500});
    auto d = g.build();
    pgtest::Reference ref(g);
    if (gen.coin(0.3) && d->vertex_count() > 0) {
      const RowIndex v = static_cast<RowIndex>(gen.index(d->vertex_count()));
      d->delete_element(ElementRef::of(VertexId{v}));
      ref.kill(ElementClass::kVertex, v);
    }
    for (auto cls : {ElementClass::kVertex, ElementClass::kEdge}) {
      const Predicate filter = gen.predicate(g.schema, cls, 2);
      BreakpointSet bps;
      for (std::size_t i = gen.index(3); i > 0; --i) bps.push_back(gen.predicate(g.schema, cls, 3));
      DriverExecution exec(*d, scan(cls == ElementClass::kVertex ? QueryKind::kVertexScan : QueryKind::kEdgeScan, filter),
                           bps);
      auto got = pgtest::drain(exec);
      auto want = pgtest::scan_oracle(ref, cls, filter, bps);
      EXPECT_EQ(got.matches, want.matches);
      EXPECT_EQ(got.processed_at_match, want.processed_at_match);
      EXPECT_EQ(got.processed_total, want.processed_total);
    }
  }
}

TEST(DriverQueryProperty, TraversalsMatchOracle) {
  pgtest::Gen gen(202);
  for (int round = 0; round < 40; ++round) {
    auto g = gen.graph({120, 400, 1});
    auto d = g.build();
    pgtest::Reference ref(g);
    for (auto kind : {QueryKind::kBfs, QueryKind::kDfs}) {
      const RowIndex start = static_cast<RowIndex>(gen.index(d->vertex_count()));
      const auto dir = static_cast<Direction>(gen.index(3));
      std::optional<std::uint32_t> depth;
      if (gen.coin(0.4)) depth = static_cast<std::uint32_t>(gen.index(4));
      const Predicate filter = gen.predicate(g.schema, ElementClass::kVertex, 1);
      BreakpointSet bps;
      if (gen.coin(0.5)) bps.push_back(gen.predicate(g.schema, ElementClass::kVertex, 2));
      DriverExecution exec(*d, [&] {
        auto s = traversal(kind, start, dir, depth);
        s.filter = filter;
        return s;
      }(), bps);
      auto got = pgtest::drain(exec);
      auto want = kind == QueryKind::kBfs ? pgtest::bfs_oracle(ref, start, dir, depth, filter, bps)
                                          : pgtest::dfs_oracle(ref, start, dir, depth, filter, bps);
      EXPECT_EQ(got.matches, want.matches);
      EXPECT_EQ(got.reason, want.reason);
      EXPECT_EQ(got.processed_at_match, want.processed_at_match);
      if (kind == QueryKind::kBfs) {
        for (std::size_t i = 1; i < got.matches.size(); ++i) {
          EXPECT_LE(*got.matches[i - 1].depth, *got.matches[i].depth);
        }
      }
      std::set<RowIndex> distinct;
      for (const auto& m : got.matches) EXPECT_TRUE(distinct.insert(m.row).second) << "duplicate " << m.row;
    }
  }
}

TEST(DriverQueryProperty, IdenticalSpecsAreDeterministic) {
  pgtest::Gen gen(7);
  auto g = gen.graph({300, 1200, 100});
  auto d = g.build();
  const auto spec = traversal(QueryKind::kDfs, 3, Direction::kBoth);
  const BreakpointSet bps = {gen.predicate(g.schema, ElementClass::kVertex, 1)};
  DriverExecution a(*d, spec, bps), b(*d, spec, bps);
  auto ra = pgtest::drain(a), rb = pgtest::drain(b);
  EXPECT_EQ(ra.matches, rb.matches);
}

}  // namespace
}  // namespace pausegraph
