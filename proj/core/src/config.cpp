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

#include "pausegraph/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pausegraph/error.hpp"
#include "pausegraph/ingest.hpp"

namespace pausegraph {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::shared_ptr<Dataset> DatasetSource::load() const {
  return kind == Kind::kManifest ? load_manifest(manifest) : generate_dataset(generate);
}

Clock ServiceConfig::clock() const {
  if (!fixed_clock) return system_clock_seconds;
  const std::int64_t t = *fixed_clock;
  return [t] { return t; };
}

std::optional<std::string> process_environment(const char* name) {
  const char* v = std::getenv(name);
  if (!v) return std::nullopt;
  return std::string(v);
}

namespace {

std::int64_t parse_integer(std::string_view text, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidSpec, std::string(what) + " must be an integer, got '" +
                                             std::string(text) + "'");
  }
  return v;
}

int checked_port(std::int64_t port) {
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::kInvalidSpec, "port " + std::to_string(port) + " is out of range");
  }
  return static_cast<int>(port);
}

std::optional<std::int64_t> parse_clock(std::string_view text) {
  if (text == "system") return std::nullopt;
  return parse_integer(text, "clock");
}

}  // namespace

ServiceConfig parse_config(std::string_view text, const fs::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidSpec, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "host" && key != "port" && key != "repository" && key != "clock" &&
        key != "datasets") {
      throw Error(ErrorCode::kInvalidSpec, "unknown config key '" + key + "'");
    }
  }

  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  ServiceConfig c;
  try {
    if (j.contains("host")) c.host = j.at("host").get<std::string>();
    if (j.contains("port")) c.port = checked_port(j.at("port").get<std::int64_t>());
    if (j.contains("repository")) c.repository = resolve(j.at("repository").get<std::string>());
    if (j.contains("clock")) {
      const Json& clock = j.at("clock");
      if (clock.is_string()) {
        c.fixed_clock = parse_clock(clock.get<std::string>());
      } else {
        c.fixed_clock = clock.get<std::int64_t>();
      }
    }
    if (j.contains("datasets")) {
      for (const auto& entry : j.at("datasets")) {
        DatasetSource src;
        if (entry.contains("manifest")) {
          src.kind = DatasetSource::Kind::kManifest;
          src.manifest = resolve(entry.at("manifest").get<std::string>());
        } else if (entry.contains("generate")) {
          const Json& g = entry.at("generate");
          src.kind = DatasetSource::Kind::kGenerate;
          if (g.contains("seed")) src.generate.seed = g.at("seed").get<std::uint64_t>();
          if (g.contains("scale")) src.generate.scale = g.at("scale").get<std::size_t>();
          if (g.contains("name")) src.generate.name = g.at("name").get<std::string>();
        } else {
          throw Error(ErrorCode::kInvalidSpec,
                      "dataset entries need a 'manifest' or 'generate' key");
        }
        c.datasets.push_back(std::move(src));
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("malformed config: ") + e.what());
  }
  return c;
}

void apply_environment(ServiceConfig& config, const Environment& env) {
  if (auto v = env("PAUSEGRAPH_HOST")) config.host = *v;
  if (auto v = env("PAUSEGRAPH_PORT")) config.port = checked_port(parse_integer(*v, "PAUSEGRAPH_PORT"));
  if (auto v = env("PAUSEGRAPH_REPOSITORY")) config.repository = *v;
  if (auto v = env("PAUSEGRAPH_CLOCK")) config.fixed_clock = parse_clock(*v);
}

ServiceConfig load_config(const std::optional<fs::path>& file, const Environment& env) {
  ServiceConfig config;
  if (file) {
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open config " + file->string());
    std::ostringstream buf;
    buf << in.rdbuf();
    config = parse_config(buf.str(), file->parent_path());
  }
  apply_environment(config, env);
  return config;
}

}  // namespace pausegraph
