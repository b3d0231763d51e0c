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
#include <memory>
#include <string>

#include "pausegraph/dataset.hpp"
#include "pausegraph/schema.hpp"

namespace pausegraph {

/// Seeded synthetic social-network graph shaped after the LDBC SNB schema:
/// 8 vertex types, 13 edge types, `scale` vertices and 5 * scale edges.
/// Vertices are grouped by type in schema order, edges likewise, so the
/// in-memory form and a load of the written files assign identical rows.
///
/// Output depends only on (seed, scale, name): the random stream is
/// std::mt19937_64, whose sequence the standard fixes, and every mapping
/// from it is spelled out here rather than left to library distributions.
struct GeneratorOptions {
  std::uint64_t seed = 1;
  std::size_t scale = 1000;
  std::string name = "snb";
};

inline constexpr std::size_t kMinimumScale = 8;
inline constexpr std::size_t kEdgesPerVertex = 5;

Schema snb_schema();

// Throws kInvalidSpec when scale < kMinimumScale.
std::shared_ptr<Dataset> generate_dataset(const GeneratorOptions& options);

/// Writes manifest.json, schema.json and one CSV per type into `directory`.
/// Vertex ids in the files are row indices. Byte-identical for equal options.
void generate_files(const GeneratorOptions& options, const std::filesystem::path& directory);

}  // namespace pausegraph
