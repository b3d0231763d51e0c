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

#include "pausegraph/service.hpp"

#include <cctype>
#include <limits>

#include "pausegraph/exploration.hpp"

namespace pausegraph {

using wire::Json;

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownDataset:
    case ErrorCode::kUnknownBookmark:
      return 404;
    case ErrorCode::kInvalidSpec:
    case ErrorCode::kInvalidPredicate:
    case ErrorCode::kDanglingEdge:
      return 400;
    case ErrorCode::kDeadElement:
      return 410;
    case ErrorCode::kSessionBusy:
    case ErrorCode::kSessionTerminal:
      return 409;
    case ErrorCode::kIoError:
      return 500;
  }
  return 500;
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string percent_decode(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '%' && i + 2 < in.size()) {
      const int hi = hex_digit(in[i + 1]);
      const int lo = hex_digit(in[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(in[i] == '+' ? ' ' : in[i]);
  }
  return out;
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> segments;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    const auto next = path.find('/', pos);
    const auto piece = path.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                       : next - pos);
    if (!piece.empty()) segments.push_back(percent_decode(piece));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return segments;
}

std::map<std::string, std::string> parse_query(std::string_view query) {
  std::map<std::string, std::string> params;
  std::size_t pos = 0;
  while (pos < query.size()) {
    auto amp = query.find('&', pos);
    if (amp == std::string_view::npos) amp = query.size();
    const auto pair = query.substr(pos, amp - pos);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos) {
      params[percent_decode(pair)] = "";
    } else {
      params[percent_decode(pair.substr(0, eq))] = percent_decode(pair.substr(eq + 1));
    }
    pos = amp + 1;
  }
  return params;
}

Json parse_body(std::string_view body) {
  if (body.empty()) return Json::object();
  return wire::parse(body, ErrorCode::kInvalidSpec);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kInvalidSpec, std::string("request body lacks '") + key + "'");
  }
  return j.at(key);
}

struct RouteNotFound {};

Json dataset_summary(const Dataset& d) {
  Json j = Json::object();
  j["name"] = d.name();
  j["vertex_count"] = d.live_count(ElementClass::kVertex);
  j["edge_count"] = d.live_count(ElementClass::kEdge);
  j["version"] = d.version();
  return j;
}

Json bookmark_summary(const BookmarkSummary& s) {
  Json j = Json::object();
  j["id"] = s.id;
  j["created_at"] = s.created_at;
  j["description"] = s.description ? Json(*s.description) : Json(nullptr);
  j["session"] = s.session_id;
  j["dataset"] = s.dataset;
  j["vertex_count"] = s.vertex_count;
  j["edge_count"] = s.edge_count;
  return j;
}

Json endpoint_json(const EndpointInfo& info) {
  Json j = Json::object();
  j["id"] = info.id.row;
  j["type"] = info.type;
  return j;
}

RowIndex parse_row(const std::string& text) {
  if (text.empty() || text.size() > 10) {
    throw Error(ErrorCode::kInvalidSpec, "bad element id '" + text + "'");
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kInvalidSpec, "bad element id '" + text + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v >= std::numeric_limits<RowIndex>::max()) {
    throw Error(ErrorCode::kInvalidSpec, "bad element id '" + text + "'");
  }
  return static_cast<RowIndex>(v);
}

}  // namespace

Service::Service(ServiceOptions options)
    : bookmarks_(std::move(options.repository), std::move(options.clock)) {}

void Service::add_dataset(std::shared_ptr<Dataset> dataset) {
  std::lock_guard lock(datasets_mutex_);
  const std::string name = dataset->name();
  if (!datasets_.emplace(name, std::move(dataset)).second) {
    throw Error(ErrorCode::kInvalidSpec, "dataset '" + name + "' is already loaded");
  }
}

std::shared_ptr<Dataset> Service::dataset(std::string_view name) const {
  std::lock_guard lock(datasets_mutex_);
  auto it = datasets_.find(name);
  if (it == datasets_.end()) {
    throw Error(ErrorCode::kUnknownDataset, "unknown dataset '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::shared_ptr<Dataset>> Service::datasets() const {
  std::lock_guard lock(datasets_mutex_);
  std::vector<std::shared_ptr<Dataset>> out;
  for (const auto& [name, d] : datasets_) out.push_back(d);
  return out;
}

HttpResponse Service::route(std::string_view method, std::string_view target,
                            std::string_view body) {
  const auto qpos = target.find('?');
  const auto path = target.substr(0, qpos);
  const auto query =
      qpos == std::string_view::npos ? std::map<std::string, std::string>{}
                                     : parse_query(target.substr(qpos + 1));
  const auto segments = split_path(path);

  int status = 200;
  try {
    Json data = dispatch(method, segments, query, body, status);
    return HttpResponse{status, wire::ok_envelope(std::move(data)).dump()};
  } catch (const RouteNotFound&) {
    return HttpResponse{404, wire::error_envelope(ErrorCode::kInvalidSpec,
                                                  "no route for " + std::string(method) + " " +
                                                      std::string(path))
                                 .dump()};
  } catch (const Error& e) {
    return HttpResponse{http_status_for(e.code()), wire::error_envelope(e.code(), e.what()).dump()};
  } catch (const std::exception& e) {
    return HttpResponse{500, wire::error_envelope(ErrorCode::kIoError, e.what()).dump()};
  }
}

Json Service::dispatch(std::string_view method, const std::vector<std::string>& seg,
                       const std::map<std::string, std::string>& query, std::string_view body,
                       int& status) {
  const bool get = method == "GET";
  const bool post = method == "POST";
  if (seg.size() < 2 || seg[0] != "api") throw RouteNotFound{};

  if (seg[1] == "datasets") {
    if (get && seg.size() == 2) {
      Json list = Json::array();
      for (const auto& d : datasets()) {
        auto lock = d->read_lock();
        list.push_back(dataset_summary(*d));
      }
      return list;
    }
    if (post && seg.size() == 4 && seg[3] == "elements:delete") {
      auto d = dataset(seg[2]);
      const Json req = parse_body(body);
      const ElementRef e = wire::decode_element(req, ErrorCode::kInvalidSpec, "delete");
      Json out = Json::object();
      out["version"] = d->delete_element(e);
      return out;
    }
    throw RouteNotFound{};
  }

  if (seg[1] == "sessions") {
    if (post && seg.size() == 2) {
      const Json req = parse_body(body);
      const Json& name = require(req, "dataset");
      if (!name.is_string()) throw Error(ErrorCode::kInvalidSpec, "'dataset' must be a string");
      auto d = dataset(name.get<std::string>());
      DriverQuerySpec spec = wire::decode_spec(require(req, "spec"));
      BreakpointSet breakpoints;
      if (req.contains("breakpoints") && !req.at("breakpoints").is_null()) {
        const Json& bps = req.at("breakpoints");
        if (!bps.is_array()) throw Error(ErrorCode::kInvalidSpec, "'breakpoints' must be an array");
        for (std::size_t i = 0; i < bps.size(); ++i) {
          try {
            breakpoints.push_back(wire::decode_predicate(bps[i]));
          } catch (const Error& e) {
            throw Error(e.code(), "breakpoint " + std::to_string(i) + ": " + e.what());
          }
        }
      }
      auto session = sessions_.create(std::move(d), std::move(spec), std::move(breakpoints));
      status = 201;
      Json out = Json::object();
      out["session_id"] = session->id();
      return out;
    }
    if (seg.size() == 3 && get) {
      return wire::encode_snapshot(sessions_.find(seg[2])->snapshot());
    }
    if (seg.size() >= 4 && post) return session_request(seg[2], seg, body, status);
    throw RouteNotFound{};
  }

  if (seg[1] == "bookmarks" && get) {
    if (seg.size() == 2) {
      std::optional<std::string_view> session;
      if (auto it = query.find("session"); it != query.end()) session = it->second;
      Json list = Json::array();
      for (const auto& s : bookmarks_.list(session)) list.push_back(bookmark_summary(s));
      return list;
    }
    if (seg.size() == 3) {
      return wire::parse(bookmarks_.document(seg[2]), ErrorCode::kIoError);
    }
  }
  throw RouteNotFound{};
}

Json Service::session_request(const std::string& session_id, const std::vector<std::string>& seg,
                              std::string_view body, int& status) {
  auto session = sessions_.find(session_id);
  const std::string& action = seg[3];

  // Route shape is checked before the lease so unknown paths stay 404.
  const bool simple = seg.size() == 4 &&
                      (action == "continue" || action == "stop" || action == "expand" ||
                       action == "estimate" || action == "attributes" || action == "bookmarks");
  const bool endpoints = seg.size() == 6 && action == "edge" && seg[5] == "endpoints";
  const bool restore = seg.size() == 6 && action == "bookmarks" && seg[5] == "restore";
  if (!simple && !endpoints && !restore) throw RouteNotFound{};

  auto lease = session->try_acquire();
  if (!lease) {
    throw Error(ErrorCode::kSessionBusy, "session " + session_id + " has a request in flight");
  }

  Dataset& d = session->dataset();
  if (action == "continue") {
    return wire::encode_pause_event(session->resume());
  }
  if (action == "stop") {
    session->stop();
    Json out = Json::object();
    out["status"] = std::string(to_string(session->snapshot().status));
    return out;
  }
  if (action == "expand" || action == "estimate") {
    ExpansionRequest req = wire::decode_expansion_request(parse_body(body));
    auto lock = d.read_lock();
    if (action == "expand") return wire::encode_delta(expand_neighborhood(d, req));
    Json out = Json::object();
    out["count"] = estimate_expansion(d, req);
    return out;
  }
  if (action == "attributes") {
    const Json req = parse_body(body);
    const Json& elements_json = require(req, "elements");
    const Json& names_json = require(req, "names");
    if (!elements_json.is_array() || !names_json.is_array()) {
      throw Error(ErrorCode::kInvalidSpec, "'elements' and 'names' must be arrays");
    }
    std::vector<ElementRef> elements;
    for (const auto& e : elements_json) {
      elements.push_back(wire::decode_element(e, ErrorCode::kInvalidSpec, "attributes"));
    }
    std::vector<std::string> names;
    for (const auto& n : names_json) {
      if (!n.is_string()) throw Error(ErrorCode::kInvalidSpec, "attribute names must be strings");
      names.push_back(n.get<std::string>());
    }
    auto lock = d.read_lock();
    return wire::encode_fetch_result(fetch_attributes(d, elements, names));
  }
  if (endpoints) {
    const EdgeId edge{parse_row(seg[4])};
    auto lock = d.read_lock();
    const auto [src, dst] = incident_vertices(d, edge);
    Json out = Json::object();
    out["source"] = endpoint_json(src);
    out["target"] = endpoint_json(dst);
    return out;
  }
  if (restore) {
    auto lock = d.read_lock();
    RestoreResult result = bookmarks_.restore(seg[4], d);
    Json stale = Json::array();
    for (const auto& e : result.stale) {
      Json j = wire::encode_element(e);
      j["reason"] = "deleted";
      stale.push_back(std::move(j));
    }
    Json out = Json::object();
    out["payload"] = wire::encode_view(result.payload);
    out["staleness"] = std::move(stale);
    return out;
  }
  // action == "bookmarks": store
  const Json req = parse_body(body);
  SubgraphView payload = wire::decode_view(require(req, "payload"), ErrorCode::kInvalidSpec);
  std::optional<std::string> description;
  if (req.contains("description") && !req.at("description").is_null()) {
    if (!req.at("description").is_string()) {
      throw Error(ErrorCode::kInvalidSpec, "'description' must be a string or null");
    }
    description = req.at("description").get<std::string>();
  }
  Bookmark b = [&] {
    auto lock = d.read_lock();
    return bookmarks_.store(session->id(), d, std::move(payload), std::move(description));
  }();
  status = 201;
  Json out = Json::object();
  out["id"] = b.id;
  out["created_at"] = b.created_at;
  out["description"] = b.description ? Json(*b.description) : Json(nullptr);
  out["session"] = b.session_id;
  out["dataset"] = b.dataset;
  out["dataset_version"] = b.dataset_version;
  out["vertex_count"] = b.payload.vertices().size();
  out["edge_count"] = b.payload.edges().size();
  return out;
}

}  // namespace pausegraph
