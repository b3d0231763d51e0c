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
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "pausegraph/dataset.hpp"
#include "pausegraph/subgraph_view.hpp"

namespace pausegraph {

// Seconds since the epoch. Injected so that tests and replays are stable.
using Clock = std::function<std::int64_t()>;
std::int64_t system_clock_seconds();

struct Bookmark {
  std::string id;
  std::int64_t created_at = 0;
  std::optional<std::string> description;
  std::string dataset;
  std::uint64_t dataset_version = 0;
  SubgraphView payload;
  // Not part of the document; kept in the repository index.
  std::string session_id;

  bool operator==(const Bookmark&) const = default;
};

struct BookmarkSummary {
  std::string id;
  std::int64_t created_at = 0;
  std::optional<std::string> description;
  std::string session_id;
  std::string dataset;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;

  bool operator==(const BookmarkSummary&) const = default;
};

struct RestoreResult {
  SubgraphView payload;
  // Payload elements deleted in the live dataset, vertices first, in payload order.
  std::vector<ElementRef> stale;
};

/// The bookmark document. Top-level keys, in order: id, created_at,
/// description, dataset, dataset_version, vertices, edges.
std::string serialize_bookmark(const Bookmark& bookmark);
// Throws kIoError on malformed documents.
Bookmark parse_bookmark(std::string_view document);

std::vector<ElementRef> find_stale(const Dataset& dataset, const SubgraphView& payload);

/// Directory of bookmark documents (`<id>.json`) plus `index.json` holding
/// listing metadata in store order. Ids are "bm-<created_at>-<counter>";
/// timestamps never decrease, so store order is chronological.
///
/// Stores are serialized; listings and reads may run alongside them and see
/// either the state before or after a store.
class BookmarkRepository {
 public:
  /// Creates the directory if needed and loads an existing index.
  /// Throws kIoError.
  explicit BookmarkRepository(std::filesystem::path directory, Clock clock = system_clock_seconds);

  const std::filesystem::path& directory() const noexcept { return directory_; }

  /// Persists `payload` taken in `session_id` over `dataset`.
  /// Throws kDanglingEdge naming the first edge whose endpoint is missing from
  /// the payload, kIoError on storage failures.
  Bookmark store(std::string_view session_id, const Dataset& dataset, SubgraphView payload,
                 std::optional<std::string> description);

  std::vector<BookmarkSummary> list(std::optional<std::string_view> session = std::nullopt) const;

  // Throws kUnknownBookmark.
  Bookmark get(std::string_view id) const;
  // The raw stored document.
  std::string document(std::string_view id) const;

  /// Returns the stored payload untouched plus the elements deleted since.
  /// Throws kUnknownBookmark, or kInvalidSpec when `dataset` is not the one
  /// the bookmark was taken on.
  RestoreResult restore(std::string_view id, const Dataset& dataset) const;

 private:
  std::filesystem::path path_for(std::string_view id) const;
  const BookmarkSummary* find(std::string_view id) const;
  void write_index() const;

  std::filesystem::path directory_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  std::vector<BookmarkSummary> index_;
  std::uint64_t next_counter_ = 1;
  std::int64_t last_created_at_ = 0;
};

}  // namespace pausegraph
