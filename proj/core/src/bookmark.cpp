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

#include "pausegraph/bookmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "pausegraph/error.hpp"
#include "pausegraph/wire.hpp"

namespace pausegraph {

namespace fs = std::filesystem;
using wire::Json;

std::int64_t system_clock_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string serialize_bookmark(const Bookmark& b) {
  Json j = Json::object();
  j["id"] = b.id;
  j["created_at"] = b.created_at;
  j["description"] = b.description ? Json(*b.description) : Json(nullptr);
  j["dataset"] = b.dataset;
  j["dataset_version"] = b.dataset_version;
  j["vertices"] = wire::encode_view_vertices(b.payload);
  j["edges"] = wire::encode_view_edges(b.payload);
  return j.dump();
}

Bookmark parse_bookmark(std::string_view document) {
  constexpr auto code = ErrorCode::kIoError;
  const Json j = wire::parse(document, code);
  auto require = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(code, std::string("bookmark document lacks '") + key + "'");
    }
    return j.at(key);
  };
  try {
    Bookmark b;
    b.id = require("id").get<std::string>();
    b.created_at = require("created_at").get<std::int64_t>();
    const Json& desc = require("description");
    if (!desc.is_null()) b.description = desc.get<std::string>();
    b.dataset = require("dataset").get<std::string>();
    b.dataset_version = require("dataset_version").get<std::uint64_t>();
    require("vertices");
    require("edges");
    b.payload = wire::decode_view(j, code);
    return b;
  } catch (const Json::exception& e) {
    throw Error(code, std::string("malformed bookmark document: ") + e.what());
  }
}

std::vector<ElementRef> find_stale(const Dataset& dataset, const SubgraphView& payload) {
  std::vector<ElementRef> stale;
  for (const auto& v : payload.vertices()) {
    if (!dataset.is_live(v.id)) stale.push_back(ElementRef::of(v.id));
  }
  for (const auto& e : payload.edges()) {
    if (!dataset.is_live(e.id)) stale.push_back(ElementRef::of(e.id));
  }
  return stale;
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return buf.str();
}

// Write-then-rename so readers never observe a partial file.
void write_file_atomically(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot create " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot rename " + tmp.string() + ": " + ec.message());
}

Json encode_summary(const BookmarkSummary& s) {
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

BookmarkSummary decode_summary(const Json& j) {
  BookmarkSummary s;
  s.id = j.at("id").get<std::string>();
  s.created_at = j.at("created_at").get<std::int64_t>();
  if (!j.at("description").is_null()) s.description = j.at("description").get<std::string>();
  s.session_id = j.at("session").get<std::string>();
  s.dataset = j.at("dataset").get<std::string>();
  s.vertex_count = j.at("vertex_count").get<std::size_t>();
  s.edge_count = j.at("edge_count").get<std::size_t>();
  return s;
}

}  // namespace

BookmarkRepository::BookmarkRepository(fs::path directory, Clock clock)
    : directory_(std::move(directory)), clock_(std::move(clock)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create bookmark directory " + directory_.string() + ": " + ec.message());
  }
  const fs::path index_path = directory_ / "index.json";
  if (!fs::exists(index_path)) return;
  try {
    const Json j = wire::parse(read_file(index_path), ErrorCode::kIoError);
    next_counter_ = j.at("next_counter").get<std::uint64_t>();
    for (const auto& entry : j.at("bookmarks")) index_.push_back(decode_summary(entry));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kIoError, "corrupt bookmark index " + index_path.string() + ": " +
                                         e.what());
  }
  if (!index_.empty()) last_created_at_ = index_.back().created_at;
}

fs::path BookmarkRepository::path_for(std::string_view id) const {
  return directory_ / (std::string(id) + ".json");
}

const BookmarkSummary* BookmarkRepository::find(std::string_view id) const {
  for (const auto& s : index_) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

void BookmarkRepository::write_index() const {
  Json entries = Json::array();
  for (const auto& s : index_) entries.push_back(encode_summary(s));
  Json j = Json::object();
  j["next_counter"] = next_counter_;
  j["bookmarks"] = std::move(entries);
  write_file_atomically(directory_ / "index.json", j.dump(1));
}

Bookmark BookmarkRepository::store(std::string_view session_id, const Dataset& dataset,
                                   SubgraphView payload, std::optional<std::string> description) {
  if (auto dangling = payload.first_dangling_edge()) {
    throw Error(ErrorCode::kDanglingEdge, "edge " + std::to_string(dangling->row) +
                                              " has an endpoint outside the payload");
  }

  std::unique_lock lock(mutex_);
  Bookmark b;
  b.created_at = std::max(clock_(), last_created_at_);
  char id[64];
  std::snprintf(id, sizeof id, "bm-%lld-%08llu", static_cast<long long>(b.created_at),
                static_cast<unsigned long long>(next_counter_));
  b.id = id;
  b.description = std::move(description);
  b.dataset = dataset.name();
  b.dataset_version = dataset.version();
  b.payload = std::move(payload);
  b.session_id = std::string(session_id);

  write_file_atomically(path_for(b.id), serialize_bookmark(b));

  index_.push_back(BookmarkSummary{b.id, b.created_at, b.description, b.session_id, b.dataset,
                                   b.payload.vertices().size(), b.payload.edges().size()});
  ++next_counter_;
  last_created_at_ = b.created_at;
  try {
    write_index();
  } catch (...) {
    index_.pop_back();
    --next_counter_;
    throw;
  }
  return b;
}

std::vector<BookmarkSummary> BookmarkRepository::list(std::optional<std::string_view> session) const {
  std::shared_lock lock(mutex_);
  std::vector<BookmarkSummary> out;
  for (const auto& s : index_) {
    if (!session || s.session_id == *session) out.push_back(s);
  }
  return out;
}

std::string BookmarkRepository::document(std::string_view id) const {
  std::shared_lock lock(mutex_);
  if (!find(id)) throw Error(ErrorCode::kUnknownBookmark, "unknown bookmark '" + std::string(id) + "'");
  return read_file(path_for(id));
}

Bookmark BookmarkRepository::get(std::string_view id) const {
  std::string session;
  {
    std::shared_lock lock(mutex_);
    const auto* summary = find(id);
    if (!summary) {
      throw Error(ErrorCode::kUnknownBookmark, "unknown bookmark '" + std::string(id) + "'");
    }
    session = summary->session_id;
  }
  Bookmark b = parse_bookmark(document(id));
  b.session_id = std::move(session);
  return b;
}

RestoreResult BookmarkRepository::restore(std::string_view id, const Dataset& dataset) const {
  Bookmark b = get(id);
  if (b.dataset != dataset.name()) {
    throw Error(ErrorCode::kInvalidSpec, "bookmark " + b.id + " belongs to dataset '" + b.dataset +
                                             "', not '" + dataset.name() + "'");
  }
  RestoreResult result;
  result.stale = find_stale(dataset, b.payload);
  result.payload = std::move(b.payload);
  return result;
}

}  // namespace pausegraph
