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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pausegraph/config.hpp"
#include "pausegraph/service.hpp"

namespace pausegraph {

/// Headless exploration script.
///
///   # comment
///   @dataset generate <seed> <scale> [name]   |   @dataset load <manifest>
///   @clock <epoch seconds>
///   create-session {"dataset": "snb", "spec": {...}, "breakpoints": [...]}
///   > 201 {"ok":true,"data":{"session_id":"s-000001"}}
///   continue
///   expand {"vertex": $match.id, "direction": "both", ...}
///   estimate {...}
///   fetch {"elements": $delta.vertices, "names": ["firstname"]}
///   bookmark "optional description"
///   restore [$bookmark | <bookmark id>]
///   stop
///   status
///
/// A "> " line holds the expected response (status and body) of the command
/// above it. Directives must precede commands. Every command acts on the
/// script's one session, opened by its single create-session.
///
/// Variables are bound from earlier responses: $session, $bookmark, $match
/// (last match as an element object), $match.id, $delta.vertices and
/// $delta.edges (elements of the last expansion), $view.vertices and
/// $view.edges (everything accumulated so far). Unbound variables expand to
/// null. The bookmark payload is the accumulated view.
struct ScriptCommand {
  std::string verb;
  std::string argument;
  std::size_t line = 0;
  std::optional<std::string> expected;
};

struct Script {
  std::optional<DatasetSource> dataset;
  std::optional<std::int64_t> clock;
  std::vector<ScriptCommand> commands;
  // Source text split into lines, for rewriting in record mode.
  std::vector<std::string> lines;
};

// Throws kInvalidSpec with a "line N: " prefix. Relative @dataset load paths
// resolve against `base_dir`.
Script parse_script(std::string_view text, const std::filesystem::path& base_dir = {});
Script read_script(const std::filesystem::path& path);

class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse send(std::string_view method, const std::string& target,
                            const std::string& body) = 0;
};

class ServiceTransport final : public Transport {
 public:
  explicit ServiceTransport(Service& service) : service_(service) {}
  HttpResponse send(std::string_view method, const std::string& target,
                    const std::string& body) override {
    return service_.route(method, target, body);
  }

 private:
  Service& service_;
};

struct Exchange {
  std::string method;
  std::string target;
  std::string body;
  HttpResponse response;
};

struct Divergence {
  std::size_t command = 0;  // 1-based
  std::size_t line = 0;
  std::string expected;
  std::string actual;
};

struct ReplayReport {
  std::vector<Exchange> exchanges;
  std::optional<Divergence> divergence;
  bool passed() const { return !divergence.has_value(); }
};

// "<status> <body>", the form stored on "> " lines.
std::string render_response(const HttpResponse& response);

/// Runs every command through `transport`. In golden mode each response is
/// compared with its expected block and replay stops at the first mismatch;
/// commands without an expected block are not checked.
ReplayReport replay(const Script& script, Transport& transport, bool golden);

// The script text with every expected block replaced by the observed response.
std::string record(const Script& script, const ReplayReport& report);

}  // namespace pausegraph
