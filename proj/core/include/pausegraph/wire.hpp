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

#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "pausegraph/driver_query.hpp"
#include "pausegraph/error.hpp"
#include "pausegraph/exploration.hpp"
#include "pausegraph/predicate.hpp"
#include "pausegraph/session.hpp"
#include "pausegraph/subgraph_view.hpp"
#include "pausegraph/value.hpp"

// JSON encodings shared by the HTTP protocol, bookmark documents and replay
// scripts. Objects keep insertion order so that output is byte-stable.
namespace pausegraph::wire {

using Json = nlohmann::ordered_json;

// absent -> null; otherwise {"t": tag, "v": payload}.
Json encode_value(const Value& v);
// Throws Error(on_error) with `context` prefixed to the message.
Value decode_value(const Json& j, ErrorCode on_error, std::string_view context);

Json encode_element(ElementRef e);
ElementRef decode_element(const Json& j, ErrorCode on_error, std::string_view context);

// {"conjuncts":[{"attr":..,"op":..,"value":..}, ...]}
Json encode_predicate(const Predicate& p);
// Throws kInvalidPredicate naming the offending conjunct index.
Predicate decode_predicate(const Json& j);

Json encode_spec(const DriverQuerySpec& spec);
DriverQuerySpec decode_spec(const Json& j);

Json encode_pause_event(const PauseEvent& ev);
PauseEvent decode_pause_event(const Json& j);

Json encode_expansion_request(const ExpansionRequest& req);
ExpansionRequest decode_expansion_request(const Json& j);

Json encode_delta(const SubgraphDelta& delta);
SubgraphDelta decode_delta(const Json& j);

Json encode_fetch_result(const AttributeFetchResult& result);
AttributeFetchResult decode_fetch_result(const Json& j);

Json encode_attributes(const AttributeMap& attrs);
AttributeMap decode_attributes(const Json& j, ErrorCode on_error, std::string_view context);

// Arrays of {"id","type","attrs"} and {"id","type","source","target","attrs"}.
Json encode_view_vertices(const SubgraphView& view);
Json encode_view_edges(const SubgraphView& view);
// {"vertices": [...], "edges": [...]}
Json encode_view(const SubgraphView& view);
SubgraphView decode_view(const Json& j, ErrorCode on_error);

Json encode_snapshot(const SessionSnapshot& snap);

Json ok_envelope(Json data);
Json error_envelope(ErrorCode code, std::string_view message);

/// Parses text as JSON, throwing Error(on_error) on malformed input.
Json parse(std::string_view text, ErrorCode on_error);

}  // namespace pausegraph::wire
