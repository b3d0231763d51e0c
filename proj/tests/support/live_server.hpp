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
#include <stdexcept>
#include <string>
#include <thread>

#include "pausegraph/http_server.hpp"
#include "pausegraph/service.hpp"

namespace pgtest {

// A Service served over loopback HTTP on a free port for the lifetime of the object.
class LiveServer {
 public:
  explicit LiveServer(pausegraph::ServiceOptions options)
      : service_(std::move(options)), server_(service_) {}

  void start() {
    port_ = server_.bind("127.0.0.1", 0);
    if (port_ <= 0) throw std::runtime_error("cannot bind loopback port");
    thread_ = std::thread([this] { server_.serve(); });
  }

  ~LiveServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  pausegraph::Service& service() { return service_; }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  pausegraph::Service service_;
  pausegraph::HttpServer server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace pgtest
