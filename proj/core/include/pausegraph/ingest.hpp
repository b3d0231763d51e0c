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

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "pausegraph/dataset.hpp"
#include "pausegraph/schema.hpp"

namespace pausegraph {

struct TypedFile {
  std::string type;
  std::filesystem::path file;
};

/// On-disk description of a dataset: a schema plus one CSV file per vertex
/// type and per edge type.
///
/// manifest.json:
///   {"name": "...",
///    "schema": "schema.json" | {inline schema},
///    "vertices": [{"type": "person", "file": "person.csv"}, ...],
///    "edges":    [{"type": "knows",  "file": "knows.csv"}, ...]}
///
/// schema:
///   {"vertex_types": [...], "edge_types": [...],
///    "vertex_attributes": [{"name": "age", "type": "int"}, ...],
///    "edge_attributes": [...]}
///
/// Vertex files carry a reserved "id" column (an integer unique across all
/// vertex files); edge files carry "source" and "target" referencing those
/// ids and optionally an informational "id". Every other column must be a
/// declared attribute of the class. Relative paths resolve against the
/// manifest's directory.
struct DatasetManifest {
  std::string name;
  Schema schema;
  std::vector<TypedFile> vertices;
  std::vector<TypedFile> edges;
};

// Throws kIoError for unreadable files, kInvalidSpec for malformed content.
DatasetManifest read_manifest(const std::filesystem::path& path);
std::string schema_to_json(const Schema& schema);
Schema schema_from_json(std::string_view text);

/// Loads every file named by the manifest. Vertices receive rows in file
/// order (files in manifest order); edges likewise.
/// Throws kInvalidSpec on header mismatch (naming the column) or bad cells
/// (naming file, line and column), kDanglingEdge naming the file and line of
/// an edge whose endpoint id is not defined.
std::shared_ptr<Dataset> load_manifest(const std::filesystem::path& path);
std::shared_ptr<Dataset> load_manifest(const DatasetManifest& manifest,
                                       const std::filesystem::path& base_dir);

/// Writes manifest.json, schema.json and one CSV file per type into
/// `directory`. Live elements only; vertex ids are written as row indices.
/// Columns for attributes never set within a type are omitted.
void export_dataset(const Dataset& dataset, const std::filesystem::path& directory);

// Text rendering of a cell as it appears in CSV. Empty for absent values.
std::string format_cell(const Value& value);
// Parses a non-empty CSV cell as `tag`; nullopt when malformed.
std::optional<Value> parse_cell(std::string_view text, ValueTag tag);

}  // namespace pausegraph
