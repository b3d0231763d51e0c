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

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "pausegraph/bookmark.hpp"
#include "pausegraph/dataset.hpp"
#include "pausegraph/session.hpp"
#include "pausegraph/wire.hpp"

namespace pausegraph {

struct HttpResponse {
  int status = 200;
  std::string body;  // always a JSON envelope
};

int http_status_for(ErrorCode code);

struct ServiceOptions {
  std::filesystem::path repository = "bookmarks";
  Clock clock = system_clock_seconds;
};

/// Transport-independent request handler. Every HTTP endpoint and every
/// replayed script command goes through route(), so the in-process and
/// network paths produce identical bytes.
///
/// Endpoints (bodies are JSON):
///   GET  /api/datasets
///   POST /api/datasets/{name}/elements:delete
///   POST /api/sessions
///   GET  /api/sessions/{id}
///   POST /api/sessions/{id}/continue | stop | expand | estimate | attributes
///   POST /api/sessions/{id}/edge/{eid}/endpoints
///   POST /api/sessions/{id}/bookmarks
///   POST /api/sessions/{id}/bookmarks/{bid}/restore
///   GET  /api/bookmarks[?session={id}]
///   GET  /api/bookmarks/{bid}
///
/// Session-scoped POSTs hold the session lease for their duration; a request
/// that finds it taken is answered 409 session_busy.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  // Throws kInvalidSpec if a dataset with the same name is registered.
  void add_dataset(std::shared_ptr<Dataset> dataset);
  // Throws kUnknownDataset.
  std::shared_ptr<Dataset> dataset(std::string_view name) const;
  std::vector<std::shared_ptr<Dataset>> datasets() const;

  SessionRegistry& sessions() noexcept { return sessions_; }
  BookmarkRepository& bookmarks() noexcept { return bookmarks_; }

  /// `target` is the request path with an optional query string.
  HttpResponse route(std::string_view method, std::string_view target, std::string_view body);

 private:
  wire::Json dispatch(std::string_view method, const std::vector<std::string>& segments,
                      const std::map<std::string, std::string>& query, std::string_view body,
                      int& status);
  wire::Json session_request(const std::string& session_id,
                             const std::vector<std::string>& segments, std::string_view body,
                             int& status);

  mutable std::mutex datasets_mutex_;
  std::map<std::string, std::shared_ptr<Dataset>, std::less<>> datasets_;
  SessionRegistry sessions_;
  BookmarkRepository bookmarks_;
};

}  // namespace pausegraph
