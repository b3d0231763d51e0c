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

#include <set>

#include "fixtures.hpp"
#include "pausegraph/error.hpp"
#include "pausegraph/session.hpp"

namespace pausegraph {
namespace {

DriverQuerySpec scan_spec() { return DriverQuerySpec{}; }
BreakpointSet age_gt_21() { return {Predicate{}.where("age", CompareOp::kGt, Value::Int(21))}; }

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

TEST(Session, FreshSnapshot) {
  SessionRegistry reg;
  DriverQuerySpec spec;
  spec.filter = Predicate{}.where("age", CompareOp::kGt, Value::Int(21));
  auto s = reg.create(pgtest::load_g0(), spec, {});
  auto snap = s->snapshot();
  EXPECT_EQ(snap.status, SessionStatus::kCreated);
  EXPECT_EQ(snap.records_processed, 0u);
  EXPECT_FALSE(snap.last_event.has_value());
}

TEST(Session, LifecycleAndCounters) {
  SessionRegistry reg;
  auto s = reg.create(pgtest::load_g0(), scan_spec(), age_gt_21());
  auto ev = s->resume();
  auto snap = s->snapshot();
  EXPECT_EQ(snap.status, SessionStatus::kPaused);
  EXPECT_EQ(snap.records_processed, 2u);
  ASSERT_TRUE(snap.last_event && is_match(*snap.last_event));
  EXPECT_EQ(std::get<MatchEvent>(*snap.last_event).element, ElementRef::of(VertexId{1}));
  EXPECT_EQ(ev, *snap.last_event);

  s->resume();
  s->resume();
  auto done = s->resume();
  EXPECT_FALSE(is_match(done));
  snap = s->snapshot();
  EXPECT_EQ(snap.status, SessionStatus::kDone);
  EXPECT_EQ(snap.records_processed, 5u);
  EXPECT_EQ(error_of([&] { s->resume(); }), ErrorCode::kSessionTerminal);

  s->stop();
  EXPECT_EQ(s->snapshot().status, SessionStatus::kStopped);
  EXPECT_EQ(s->snapshot().records_processed, 5u);
  s->stop();
  EXPECT_EQ(s->snapshot().status, SessionStatus::kStopped);
}

TEST(Session, StopPausedThenContinueFails) {
  SessionRegistry reg;
  auto s = reg.create(pgtest::load_g0(), scan_spec(), age_gt_21());
  s->resume();
  s->stop();
  EXPECT_EQ(error_of([&] { s->resume(); }), ErrorCode::kSessionTerminal);
}

TEST(Session, StoppingOneLeavesAnotherUntouched) {
  auto d = pgtest::load_g0();
  SessionRegistry reg;
  auto a = reg.create(d, scan_spec(), age_gt_21());
  a->resume();
  a->stop();
  auto b = reg.create(d, scan_spec(), age_gt_21());
  std::vector<RowIndex> seen;
  for (;;) {
    auto ev = b->resume();
    if (!is_match(ev)) break;
    seen.push_back(std::get<MatchEvent>(ev).element.row);
  }
  EXPECT_EQ(seen, (std::vector<RowIndex>{1, 2, 3}));
}

TEST(Session, RegistryIdsAreDistinctAndSequential) {
  auto d = pgtest::load_g0();
  SessionRegistry reg;
  auto a = reg.create(d, scan_spec(), {});
  auto b = reg.create(d, scan_spec(), {});
  EXPECT_NE(a->id(), b->id());
  EXPECT_EQ(a->id(), "s-000001");
  EXPECT_EQ(b->id(), "s-000002");
  EXPECT_EQ(reg.find("s-000002"), b);
  EXPECT_EQ(error_of([&] { reg.find("s-999999"); }), ErrorCode::kUnknownSession);

  DriverQuerySpec bad;
  bad.kind = QueryKind::kBfs;
  EXPECT_EQ(error_of([&] { reg.create(d, bad, {}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(reg.create(d, scan_spec(), {})->id(), "s-000003");
  EXPECT_EQ(reg.size(), 3u);
  EXPECT_TRUE(reg.erase("s-000001"));
  EXPECT_FALSE(reg.erase("s-000001"));
  EXPECT_EQ(reg.size(), 2u);
}

TEST(Session, LeaseIsExclusive) {
  SessionRegistry reg;
  auto s = reg.create(pgtest::load_g0(), scan_spec(), {});
  {
    auto lease = s->try_acquire();
    ASSERT_TRUE(lease.has_value());
    EXPECT_FALSE(s->try_acquire().has_value());
  }
  EXPECT_TRUE(s->try_acquire().has_value());
}

TEST(Session, RecordsVersionAtCreation) {
  auto d = pgtest::load_g0();
  d->delete_element(ElementRef::of(EdgeId{0}));
  SessionRegistry reg;
  auto s = reg.create(d, scan_spec(), {});
  EXPECT_EQ(s->dataset_version_at_creation(), 1u);
}

}  // namespace
}  // namespace pausegraph
