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

#include "pausegraph/http_server.hpp"

#include <httplib.h>

#include "pausegraph/error.hpp"

namespace pausegraph {

struct HttpServer::Impl {
  explicit Impl(Service& s) : service(s) {}

  void handle(const httplib::Request& req, httplib::Response& res) {
    const std::string& target = req.target.empty() ? req.path : req.target;
    HttpResponse out = service.route(req.method, target, req.body);
    res.status = out.status;
    res.set_content(std::move(out.body), "application/json");
  }

  Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    impl_->handle(req, res);
  };
  const char* any = R"(/.*)";
  impl_->server.Get(any, handler);
  impl_->server.Post(any, handler);
  impl_->server.Put(any, handler);
  impl_->server.Delete(any, handler);
  impl_->server.Patch(any, handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::serve() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool HttpServer::running() const { return impl_->server.is_running(); }

struct HttpClientTransport::Impl {
  explicit Impl(const std::string& url) : client(url) {}
  httplib::Client client;
};

HttpClientTransport::HttpClientTransport(const std::string& base_url)
    : impl_(std::make_unique<Impl>(base_url)) {
  if (!impl_->client.is_valid()) {
    throw Error(ErrorCode::kIoError, "invalid service url '" + base_url + "'");
  }
}

HttpClientTransport::~HttpClientTransport() = default;

HttpResponse HttpClientTransport::send(std::string_view method, const std::string& target,
                                       const std::string& body) {
  httplib::Result result = method == "GET"
                               ? impl_->client.Get(target)
                               : impl_->client.Post(target, body, "application/json");
  if (!result) {
    throw Error(ErrorCode::kIoError,
                std::string(method) + " " + target + " failed: " + httplib::to_string(result.error()));
  }
  return HttpResponse{result->status, result->body};
}

}  // namespace pausegraph
