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

#include "pausegraph/wire.hpp"

#include <limits>

namespace pausegraph::wire {

namespace {

[[noreturn]] void fail(ErrorCode code, std::string_view context, std::string_view what) {
  std::string msg(context);
  if (!msg.empty()) msg += ": ";
  msg += what;
  throw Error(code, msg);
}

const Json& field(const Json& j, const char* name, ErrorCode code, std::string_view context) {
  if (!j.is_object()) fail(code, context, "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(code, context, std::string("missing field '") + name + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* name, ErrorCode code,
                           std::string_view context) {
  if (!j.is_object()) fail(code, context, "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string as_string(const Json& j, ErrorCode code, std::string_view context,
                      std::string_view what) {
  if (!j.is_string()) fail(code, context, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json& j, ErrorCode code, std::string_view context,
                    std::string_view what) {
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(code, context, std::string(what) + " is out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) fail(code, context, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

RowIndex as_row(const Json& j, ErrorCode code, std::string_view context, std::string_view what) {
  const auto v = as_int(j, code, context, what);
  if (v < 0 || v >= static_cast<std::int64_t>(std::numeric_limits<RowIndex>::max())) {
    fail(code, context, std::string(what) + " is not a valid id");
  }
  return static_cast<RowIndex>(v);
}

Json encode_optional_predicate(const std::optional<Predicate>& p) {
  return p ? encode_predicate(*p) : Json(nullptr);
}

}  // namespace

Json encode_value(const Value& v) {
  auto tag = v.tag();
  if (!tag) return nullptr;
  Json j = Json::object();
  j["t"] = std::string(to_string(*tag));
  switch (*tag) {
    case ValueTag::kInt:
      j["v"] = v.as_int();
      break;
    case ValueTag::kFloat:
      j["v"] = v.as_float();
      break;
    case ValueTag::kText:
      j["v"] = v.as_text();
      break;
    case ValueTag::kBool:
      j["v"] = v.as_bool();
      break;
    case ValueTag::kTimestamp:
      j["v"] = v.as_timestamp().seconds;
      break;
  }
  return j;
}

Value decode_value(const Json& j, ErrorCode on_error, std::string_view context) {
  if (j.is_null()) return Value();
  const auto tag_text = as_string(field(j, "t", on_error, context), on_error, context, "value tag");
  auto tag = parse_value_tag(tag_text);
  if (!tag) fail(on_error, context, "unknown value tag '" + tag_text + "'");
  const Json& v = field(j, "v", on_error, context);
  switch (*tag) {
    case ValueTag::kInt:
      return Value::Int(as_int(v, on_error, context, "int value"));
    case ValueTag::kFloat:
      if (!v.is_number()) fail(on_error, context, "float value must be a number");
      return Value::Float(v.get<double>());
    case ValueTag::kText:
      return Value::Text(as_string(v, on_error, context, "str value"));
    case ValueTag::kBool:
      if (!v.is_boolean()) fail(on_error, context, "bool value must be a boolean");
      return Value::Bool(v.get<bool>());
    case ValueTag::kTimestamp:
      return Value::Time(as_int(v, on_error, context, "ts value"));
  }
  return Value();
}

Json encode_element(ElementRef e) {
  Json j = Json::object();
  j["class"] = std::string(to_string(e.cls));
  j["id"] = e.row;
  return j;
}

ElementRef decode_element(const Json& j, ErrorCode on_error, std::string_view context) {
  const auto cls_text =
      as_string(field(j, "class", on_error, context), on_error, context, "element class");
  auto cls = parse_element_class(cls_text);
  if (!cls) fail(on_error, context, "unknown element class '" + cls_text + "'");
  return ElementRef{*cls, as_row(field(j, "id", on_error, context), on_error, context, "id")};
}

Json encode_predicate(const Predicate& p) {
  Json conjuncts = Json::array();
  for (const auto& c : p.conjuncts) {
    Json term = Json::object();
    term["attr"] = c.attribute;
    term["op"] = std::string(to_string(c.op));
    term["value"] = encode_value(c.constant);
    conjuncts.push_back(std::move(term));
  }
  Json j = Json::object();
  j["conjuncts"] = std::move(conjuncts);
  return j;
}

Predicate decode_predicate(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidPredicate;
  const Json& conjuncts = field(j, "conjuncts", code, "predicate");
  if (!conjuncts.is_array()) fail(code, "predicate", "'conjuncts' must be an array");
  Predicate p;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    const std::string context = "conjunct " + std::to_string(i);
    const Json& term = conjuncts[i];
    Comparison c;
    c.attribute = as_string(field(term, "attr", code, context), code, context, "attr");
    const auto op_text = as_string(field(term, "op", code, context), code, context, "op");
    auto op = parse_compare_op(op_text);
    if (!op) fail(code, context, "unknown operator '" + op_text + "'");
    c.op = *op;
    c.constant = decode_value(field(term, "value", code, context), code, context);
    if (c.constant.is_absent()) fail(code, context, "comparison constant must not be null");
    p.conjuncts.push_back(std::move(c));
  }
  return p;
}

Json encode_spec(const DriverQuerySpec& spec) {
  Json j = Json::object();
  j["kind"] = std::string(to_string(spec.kind));
  j["filter"] = encode_predicate(spec.filter);
  j["start"] = spec.start ? Json(spec.start->row) : Json(nullptr);
  j["direction"] = std::string(to_string(spec.direction));
  j["max_depth"] = spec.max_depth ? Json(*spec.max_depth) : Json(nullptr);
  return j;
}

DriverQuerySpec decode_spec(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidSpec;
  DriverQuerySpec spec;
  const auto kind_text = as_string(field(j, "kind", code, "spec"), code, "spec", "kind");
  auto kind = parse_query_kind(kind_text);
  if (!kind) fail(code, "spec", "unknown query kind '" + kind_text + "'");
  spec.kind = *kind;
  if (const Json* f = optional_field(j, "filter", code, "spec")) spec.filter = decode_predicate(*f);
  if (const Json* s = optional_field(j, "start", code, "spec")) {
    spec.start = VertexId{as_row(*s, code, "spec", "start")};
  }
  if (const Json* d = optional_field(j, "direction", code, "spec")) {
    const auto text = as_string(*d, code, "spec", "direction");
    auto dir = parse_direction(text);
    if (!dir) fail(code, "spec", "unknown direction '" + text + "'");
    spec.direction = *dir;
  }
  if (const Json* m = optional_field(j, "max_depth", code, "spec")) {
    const auto depth = as_int(*m, code, "spec", "max_depth");
    if (depth < 0 || depth > std::numeric_limits<std::uint32_t>::max()) {
      fail(code, "spec", "max_depth must be a non-negative 32-bit integer");
    }
    spec.max_depth = static_cast<std::uint32_t>(depth);
  }
  return spec;
}

Json encode_pause_event(const PauseEvent& ev) {
  Json j = Json::object();
  if (const auto* m = std::get_if<MatchEvent>(&ev)) {
    j["kind"] = "match";
    j["class"] = std::string(to_string(m->element.cls));
    j["id"] = m->element.row;
    j["type"] = m->type;
    j["depth"] = m->depth ? Json(*m->depth) : Json(nullptr);
  } else {
    j["kind"] = "done";
    j["reason"] = std::string(to_string(std::get<DoneEvent>(ev).reason));
  }
  return j;
}

PauseEvent decode_pause_event(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidSpec;
  const auto kind = as_string(field(j, "kind", code, "event"), code, "event", "kind");
  if (kind == "done") {
    const auto text = as_string(field(j, "reason", code, "event"), code, "event", "reason");
    auto reason = parse_done_reason(text);
    if (!reason) fail(code, "event", "unknown done reason '" + text + "'");
    return DoneEvent{*reason};
  }
  if (kind != "match") fail(code, "event", "unknown event kind '" + kind + "'");
  MatchEvent m;
  m.element = decode_element(j, code, "event");
  m.type = as_string(field(j, "type", code, "event"), code, "event", "type");
  if (const Json* d = optional_field(j, "depth", code, "event")) {
    m.depth = static_cast<std::uint32_t>(as_int(*d, code, "event", "depth"));
  }
  return m;
}

Json encode_expansion_request(const ExpansionRequest& req) {
  Json j = Json::object();
  j["vertex"] = req.vertex.row;
  j["direction"] = std::string(to_string(req.direction));
  j["edge_filter"] = encode_optional_predicate(req.edge_filter);
  j["vertex_filter"] = encode_optional_predicate(req.vertex_filter);
  j["limit"] = req.limit ? Json(*req.limit) : Json(nullptr);
  return j;
}

ExpansionRequest decode_expansion_request(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidSpec;
  ExpansionRequest req;
  req.vertex = VertexId{as_row(field(j, "vertex", code, "expansion"), code, "expansion", "vertex")};
  if (const Json* d = optional_field(j, "direction", code, "expansion")) {
    const auto text = as_string(*d, code, "expansion", "direction");
    auto dir = parse_direction(text);
    if (!dir) fail(code, "expansion", "unknown direction '" + text + "'");
    req.direction = *dir;
  }
  if (const Json* f = optional_field(j, "edge_filter", code, "expansion")) {
    req.edge_filter = decode_predicate(*f);
  }
  if (const Json* f = optional_field(j, "vertex_filter", code, "expansion")) {
    req.vertex_filter = decode_predicate(*f);
  }
  if (const Json* l = optional_field(j, "limit", code, "expansion")) {
    const auto limit = as_int(*l, code, "expansion", "limit");
    if (limit <= 0 || limit > std::numeric_limits<std::uint32_t>::max()) {
      fail(code, "expansion", "limit must be a positive 32-bit integer");
    }
    req.limit = static_cast<std::uint32_t>(limit);
  }
  return req;
}

Json encode_delta(const SubgraphDelta& delta) {
  Json vertices = Json::array();
  for (const auto& v : delta.vertices) {
    Json jv = Json::object();
    jv["id"] = v.id.row;
    jv["type"] = v.type;
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& e : delta.edges) {
    Json je = Json::object();
    je["id"] = e.id.row;
    je["type"] = e.type;
    je["source"] = e.source.row;
    je["target"] = e.target.row;
    edges.push_back(std::move(je));
  }
  Json j = Json::object();
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  j["truncated"] = delta.truncated;
  return j;
}

SubgraphDelta decode_delta(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidSpec;
  SubgraphDelta delta;
  for (const auto& jv : field(j, "vertices", code, "delta")) {
    delta.vertices.push_back(
        DeltaVertex{VertexId{as_row(field(jv, "id", code, "delta"), code, "delta", "id")},
                    as_string(field(jv, "type", code, "delta"), code, "delta", "type")});
  }
  for (const auto& je : field(j, "edges", code, "delta")) {
    delta.edges.push_back(DeltaEdge{
        EdgeId{as_row(field(je, "id", code, "delta"), code, "delta", "id")},
        as_string(field(je, "type", code, "delta"), code, "delta", "type"),
        VertexId{as_row(field(je, "source", code, "delta"), code, "delta", "source")},
        VertexId{as_row(field(je, "target", code, "delta"), code, "delta", "target")}});
  }
  const Json& truncated = field(j, "truncated", code, "delta");
  if (!truncated.is_boolean()) fail(code, "delta", "'truncated' must be a boolean");
  delta.truncated = truncated.get<bool>();
  return delta;
}

Json encode_attributes(const AttributeMap& attrs) {
  Json j = Json::object();
  for (const auto& [name, value] : attrs) j[name] = encode_value(value);
  return j;
}

AttributeMap decode_attributes(const Json& j, ErrorCode on_error, std::string_view context) {
  if (!j.is_object()) fail(on_error, context, "'attrs' must be an object");
  AttributeMap attrs;
  for (const auto& [name, value] : j.items()) {
    attrs.emplace(name, decode_value(value, on_error, context));
  }
  return attrs;
}

Json encode_fetch_result(const AttributeFetchResult& result) {
  Json values = Json::array();
  for (const auto& entry : result.values) {
    Json jv = encode_element(entry.element);
    jv["attrs"] = encode_attributes(entry.attributes);
    values.push_back(std::move(jv));
  }
  Json warnings = Json::array();
  for (const auto& e : result.deleted) {
    Json jw = encode_element(e);
    jw["reason"] = "deleted";
    warnings.push_back(std::move(jw));
  }
  Json j = Json::object();
  j["values"] = std::move(values);
  j["warnings"] = std::move(warnings);
  return j;
}

AttributeFetchResult decode_fetch_result(const Json& j) {
  constexpr auto code = ErrorCode::kInvalidSpec;
  AttributeFetchResult result;
  for (const auto& jv : field(j, "values", code, "attributes")) {
    result.values.push_back({decode_element(jv, code, "attributes"),
                             decode_attributes(field(jv, "attrs", code, "attributes"), code,
                                               "attributes")});
  }
  for (const auto& jw : field(j, "warnings", code, "attributes")) {
    result.deleted.push_back(decode_element(jw, code, "attributes"));
  }
  return result;
}

Json encode_view_vertices(const SubgraphView& view) {
  Json vertices = Json::array();
  for (const auto& v : view.vertices()) {
    Json jv = Json::object();
    jv["id"] = v.id.row;
    jv["type"] = v.type;
    jv["attrs"] = encode_attributes(v.attributes);
    vertices.push_back(std::move(jv));
  }
  return vertices;
}

Json encode_view_edges(const SubgraphView& view) {
  Json edges = Json::array();
  for (const auto& e : view.edges()) {
    Json je = Json::object();
    je["id"] = e.id.row;
    je["type"] = e.type;
    je["source"] = e.source.row;
    je["target"] = e.target.row;
    je["attrs"] = encode_attributes(e.attributes);
    edges.push_back(std::move(je));
  }
  return edges;
}

Json encode_view(const SubgraphView& view) {
  Json j = Json::object();
  j["vertices"] = encode_view_vertices(view);
  j["edges"] = encode_view_edges(view);
  return j;
}

SubgraphView decode_view(const Json& j, ErrorCode code) {
  SubgraphView view;
  const Json& vertices = field(j, "vertices", code, "payload");
  const Json& edges = field(j, "edges", code, "payload");
  if (!vertices.is_array() || !edges.is_array()) {
    fail(code, "payload", "'vertices' and 'edges' must be arrays");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string context = "payload vertex " + std::to_string(i);
    const Json& jv = vertices[i];
    const VertexId id{as_row(field(jv, "id", code, context), code, context, "id")};
    if (!view.add_vertex(id, as_string(field(jv, "type", code, context), code, context, "type"))) {
      fail(code, context, "duplicate vertex id");
    }
    for (auto& [name, value] : decode_attributes(field(jv, "attrs", code, context), code, context)) {
      view.set_attribute(ElementRef::of(id), name, std::move(value));
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string context = "payload edge " + std::to_string(i);
    const Json& je = edges[i];
    const EdgeId id{as_row(field(je, "id", code, context), code, context, "id")};
    const bool added =
        view.add_edge(id, as_string(field(je, "type", code, context), code, context, "type"),
                      VertexId{as_row(field(je, "source", code, context), code, context, "source")},
                      VertexId{as_row(field(je, "target", code, context), code, context, "target")});
    if (!added) fail(code, context, "duplicate edge id");
    for (auto& [name, value] : decode_attributes(field(je, "attrs", code, context), code, context)) {
      view.set_attribute(ElementRef::of(id), name, std::move(value));
    }
  }
  return view;
}

Json encode_snapshot(const SessionSnapshot& snap) {
  Json j = Json::object();
  j["status"] = std::string(to_string(snap.status));
  j["records_processed"] = snap.records_processed;
  j["last_event"] = snap.last_event ? encode_pause_event(*snap.last_event) : Json(nullptr);
  return j;
}

Json ok_envelope(Json data) {
  Json j = Json::object();
  j["ok"] = true;
  j["data"] = std::move(data);
  return j;
}

Json error_envelope(ErrorCode code, std::string_view message) {
  Json err = Json::object();
  err["code"] = std::string(to_string(code));
  err["message"] = std::string(message);
  Json j = Json::object();
  j["ok"] = false;
  j["error"] = std::move(err);
  return j;
}

Json parse(std::string_view text, ErrorCode on_error) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(on_error, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace pausegraph::wire
