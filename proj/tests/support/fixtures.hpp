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

#include <atomic>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unistd.h>

#include "pausegraph/dataset.hpp"
#include "pausegraph/error.hpp"
#include "pausegraph/ingest.hpp"

namespace pgtest {

using namespace pausegraph;

inline std::filesystem::path source_dir() { return PAUSEGRAPH_SOURCE_DIR; }
inline std::filesystem::path g0_manifest() { return source_dir() / "data" / "g0" / "manifest.json"; }

// The checked-in G0 fixture: five persons, five "knows" edges.
inline std::shared_ptr<Dataset> load_g0() { return load_manifest(g0_manifest()); }

inline const Schema& g0_schema() {
  static const Schema schema({"person"}, {"knows"},
                             {{"name", ValueTag::kText}, {"age", ValueTag::kInt}},
                             {{"since", ValueTag::kTimestamp}});
  return schema;
}

struct Caught {
  ErrorCode code;
  std::string message;
};

// The pausegraph::Error thrown by fn, if any.
inline std::optional<Caught> caught(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return Caught{e.code(), e.what()};
  }
  return std::nullopt;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("pausegraph-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace pgtest
