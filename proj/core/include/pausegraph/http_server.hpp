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

#include <memory>
#include <string>

#include "pausegraph/script.hpp"
#include "pausegraph/service.hpp"

namespace pausegraph {

/// Serves a Service over HTTP/1.1. Every request is forwarded verbatim to
/// Service::route; responses are `application/json`.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds without serving. Port 0 picks a free port; returns the bound port
  // or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop(). Returns false if the server could not listen.
  bool serve();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Script transport that talks to a running service, e.g.
/// "http://127.0.0.1:8080". Connection failures surface as kIoError.
class HttpClientTransport final : public Transport {
 public:
  explicit HttpClientTransport(const std::string& base_url);
  ~HttpClientTransport() override;

  HttpResponse send(std::string_view method, const std::string& target,
                    const std::string& body) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pausegraph
