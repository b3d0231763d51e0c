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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pausegraph/bookmark.hpp"
#include "pausegraph/dataset.hpp"
#include "pausegraph/generator.hpp"

namespace pausegraph {

/// Where a dataset comes from: a manifest on disk or the generator.
struct DatasetSource {
  enum class Kind { kManifest, kGenerate };
  Kind kind = Kind::kManifest;
  std::filesystem::path manifest;
  GeneratorOptions generate;

  std::shared_ptr<Dataset> load() const;
};

/// Service settings. File format (every key optional):
///
///   {"host": "127.0.0.1", "port": 8080, "repository": "bookmarks",
///    "clock": "system" | <fixed epoch seconds>,
///    "datasets": [{"manifest": "data/g0/manifest.json"},
///                 {"generate": {"seed": 1, "scale": 1000, "name": "snb"}}]}
///
/// Relative paths resolve against the config file's directory. Environment
/// variables PAUSEGRAPH_HOST, PAUSEGRAPH_PORT, PAUSEGRAPH_REPOSITORY and
/// PAUSEGRAPH_CLOCK override the file.
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path repository = "bookmarks";
  // Unset means wall-clock time.
  std::optional<std::int64_t> fixed_clock;
  std::vector<DatasetSource> datasets;

  Clock clock() const;
};

using Environment = std::function<std::optional<std::string>(const char*)>;
std::optional<std::string> process_environment(const char* name);

// Throws kIoError for an unreadable file and kInvalidSpec for bad content.
ServiceConfig load_config(const std::optional<std::filesystem::path>& file,
                          const Environment& env = process_environment);
ServiceConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
void apply_environment(ServiceConfig& config, const Environment& env);

}  // namespace pausegraph
