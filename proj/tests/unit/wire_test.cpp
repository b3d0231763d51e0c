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
#include "random_graph.hpp"
#include "pausegraph/wire.hpp"

namespace pausegraph {
namespace {

using wire::Json;

Json parse(const char* text) { return wire::parse(text, ErrorCode::kInvalidSpec); }

TEST(Wire, ValueEncodings) {
  EXPECT_EQ(wire::encode_value(Value::Int(3)).dump(), R"({"t":"int","v":3})");
  EXPECT_EQ(wire::encode_value(Value::Float(0.5)).dump(), R"({"t":"float","v":0.5})");
  EXPECT_EQ(wire::encode_value(Value::Text("a")).dump(), R"({"t":"str","v":"a"})");
  EXPECT_EQ(wire::encode_value(Value::Bool(true)).dump(), R"({"t":"bool","v":true})");
  EXPECT_EQ(wire::encode_value(Value::Time(1262304000)).dump(), R"({"t":"ts","v":1262304000})");
  EXPECT_EQ(wire::encode_value(Value()).dump(), "null");
}

TEST(Wire, ValueRoundTripProperty) {
  pgtest::Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const auto tag = static_cast<ValueTag>(gen.index(5));
    const Value v = gen.coin(0.1) ? Value() : gen.value_for(tag);
    EXPECT_EQ(wire::decode_value(wire::encode_value(v), ErrorCode::kInvalidSpec, ""), v);
  }
}

TEST(Wire, PredicateDecodesBreakpointExample) {
  auto p = wire::decode_predicate(
      parse(R"({"conjuncts":[{"attr":"age","op":"gt","value":{"t":"int","v":21}}]})"));
  EXPECT_EQ(p, Predicate{}.where("age", CompareOp::kGt, Value::Int(21)));
}

TEST(Wire, UnknownOperatorNamesConjunct) {
  auto err = pgtest::caught([] {
    wire::decode_predicate(
        parse(R"({"conjuncts":[{"attr":"age","op":"like","value":{"t":"int","v":21}}]})"));
  });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->code, ErrorCode::kInvalidPredicate);
  EXPECT_NE(err->message.find("conjunct 0"), std::string::npos);
}

TEST(Wire, NullConstantRejected) {
  auto err = pgtest::caught([] {
    wire::decode_predicate(parse(
        R"({"conjuncts":[{"attr":"age","op":"eq","value":{"t":"int","v":1}},{"attr":"age","op":"eq","value":null}]})"));
  });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->code, ErrorCode::kInvalidPredicate);
  EXPECT_NE(err->message.find("conjunct 1"), std::string::npos);
}

TEST(Wire, PredicateRoundTripProperty) {
  pgtest::Gen gen(4);
  const auto schema = pgtest::random_schema();
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.predicate(schema, gen.coin(0.5) ? ElementClass::kVertex : ElementClass::kEdge, 4);
    EXPECT_EQ(wire::decode_predicate(wire::encode_predicate(p)), p);
  }
}

TEST(Wire, PauseEventEncodings) {
  PauseEvent m = MatchEvent{ElementRef::of(VertexId{1}), "person", std::nullopt};
  EXPECT_EQ(wire::encode_pause_event(m).dump(),
            R"({"kind":"match","class":"vertex","id":1,"type":"person","depth":null})");
  PauseEvent d = DoneEvent{DoneReason::kDepthBound};
  EXPECT_EQ(wire::encode_pause_event(d).dump(), R"({"kind":"done","reason":"depth-bound"})");
  PauseEvent t = MatchEvent{ElementRef::of(VertexId{4}), "person", 3u};
  for (const auto& ev : {m, d, t}) EXPECT_EQ(wire::decode_pause_event(wire::encode_pause_event(ev)), ev);
}

TEST(Wire, SpecRoundTripAndDefaults) {
  DriverQuerySpec s;
  s.kind = QueryKind::kBfs;
  s.start = VertexId{0};
  s.direction = Direction::kBoth;
  s.max_depth = 2;
  s.filter.where("age", CompareOp::kGe, Value::Int(20));
  EXPECT_EQ(wire::decode_spec(wire::encode_spec(s)), s);

  const auto minimal = wire::decode_spec(parse(R"({"kind":"vertex-scan"})"));
  EXPECT_EQ(minimal.kind, QueryKind::kVertexScan);
  EXPECT_TRUE(minimal.filter.is_always_true());
  EXPECT_EQ(minimal.direction, Direction::kOut);

  EXPECT_EQ(pgtest::caught([] { wire::decode_spec(parse(R"({"kind":"walk"})")); })->code,
            ErrorCode::kInvalidSpec);
  EXPECT_EQ(pgtest::caught([] { wire::decode_spec(parse(R"({"kind":"bfs","max_depth":-1})")); })->code,
            ErrorCode::kInvalidSpec);
}

TEST(Wire, ExpansionRequestRoundTrip) {
  ExpansionRequest r{VertexId{7}, Direction::kIn,
                     Predicate{}.where("since", CompareOp::kLt, Value::Time(5)),
                     std::nullopt, 10u};
  EXPECT_EQ(wire::decode_expansion_request(wire::encode_expansion_request(r)), r);
  EXPECT_EQ(pgtest::caught([] { wire::decode_expansion_request(parse(R"({"vertex":0,"limit":0})")); })->code,
            ErrorCode::kInvalidSpec);
}

TEST(Wire, DeltaFetchAndViewRoundTrip) {
  auto d = pgtest::load_g0();
  const auto delta = expand_neighborhood(*d, {VertexId{0}, Direction::kOut, {}, {}, {}});
  EXPECT_EQ(wire::decode_delta(wire::encode_delta(delta)), delta);

  const std::vector<ElementRef> els = {ElementRef::of(VertexId{0}), ElementRef::of(VertexId{1})};
  const std::vector<std::string> names = {"name", "age"};
  const auto fetched = fetch_attributes(*d, els, names);
  EXPECT_EQ(wire::decode_fetch_result(wire::encode_fetch_result(fetched)), fetched);

  SubgraphView view;
  view.add_vertex(VertexId{0}, "person");
  view.merge(delta);
  view.merge(fetched);
  EXPECT_EQ(wire::decode_view(wire::encode_view(view), ErrorCode::kInvalidSpec), view);
}

TEST(Wire, ViewRejectsDuplicates) {
  auto err = pgtest::caught([] {
    wire::decode_view(parse(R"({"vertices":[{"id":1,"type":"p","attrs":{}},{"id":1,"type":"p","attrs":{}}],"edges":[]})"),
                      ErrorCode::kInvalidSpec);
  });
  ASSERT_TRUE(err);
  EXPECT_NE(err->message.find("payload vertex 1"), std::string::npos);
}

TEST(Wire, Envelopes) {
  EXPECT_EQ(wire::ok_envelope(Json::object()).dump(), R"({"ok":true,"data":{}})");
  EXPECT_EQ(wire::error_envelope(ErrorCode::kSessionBusy, "x").dump(),
            R"({"ok":false,"error":{"code":"session_busy","message":"x"}})");
}

TEST(Wire, MalformedJson) {
  EXPECT_EQ(pgtest::caught([] { wire::parse("{", ErrorCode::kInvalidSpec); })->code,
            ErrorCode::kInvalidSpec);
}

}  // namespace
}  // namespace pausegraph
