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

#include "pausegraph/generator.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "pausegraph/csv.hpp"
#include "pausegraph/error.hpp"
#include "pausegraph/ingest.hpp"

namespace pausegraph {

namespace fs = std::filesystem;

namespace {

enum VertexType : std::size_t {
  kPerson, kForum, kPost, kComment, kTag, kTagClass, kPlace, kOrganisation, kVertexTypeCount
};

constexpr std::array<const char*, kVertexTypeCount> kVertexTypeNames = {
    "person", "forum", "post", "comment", "tag", "tagclass", "place", "organisation"};
// Per-mille shares of the vertex budget.
constexpr std::array<std::size_t, kVertexTypeCount> kVertexShares = {300, 50, 250, 300,
                                                                     40,  10, 30,  20};

struct EdgeShape {
  const char* name;
  VertexType source;
  VertexType target;
  std::size_t share;  // per mille of the edge budget
};

constexpr std::array<EdgeShape, 13> kEdgeShapes = {{
    {"friendOf", kPerson, kPerson, 300},
    {"hasCreator", kPost, kPerson, 100},
    {"hasInterest", kPerson, kTag, 60},
    {"hasMember", kForum, kPerson, 80},
    {"hasModerator", kForum, kPerson, 20},
    {"hasTag", kPost, kTag, 80},
    {"hasType", kTag, kTagClass, 10},
    {"isLocatedIn", kPerson, kPlace, 50},
    {"isPartOf", kPlace, kPlace, 10},
    {"isSubclassOf", kTagClass, kTagClass, 10},
    {"likes", kPerson, kPost, 140},
    {"containerOf", kForum, kPost, 40},
    {"replyOf", kComment, kPost, 100},
}};

constexpr std::array<const char*, 20> kFirstNames = {
    "Alice", "Bruno", "Chen", "Dana", "Emil", "Fatima", "Gustav", "Hana", "Ivan", "Jun",
    "Karim", "Lena", "Mateo", "Nadia", "Omar", "Priya", "Quinn", "Rosa", "Sven", "Yuki"};
constexpr std::array<const char*, 20> kLastNames = {
    "Smith", "Garcia", "Wang", "Muller", "Kowalski", "Silva", "Tanaka", "Khan", "Novak", "Rossi",
    "Dubois", "Kim", "Ivanova", "Jensen", "Okafor", "Lopez", "Singh", "Brown", "Costa", "Nguyen"};
constexpr std::array<const char*, 10> kOtherCountries = {
    "Germany", "India", "China", "Brazil", "France", "Japan", "Canada", "Mexico", "Italy", "Spain"};
constexpr std::array<const char*, 12> kWords = {
    "graph", "query", "river", "music", "travel", "coffee", "football", "science",
    "history", "garden", "movie", "photo"};
constexpr std::array<const char*, 4> kLanguages = {"en", "de", "es", "zh"};

constexpr std::int64_t kEpoch2005 = 1104537600;
constexpr std::int64_t kEpoch2013 = 1356998400;
constexpr std::int64_t kSecondsPerDay = 86400;

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by multiply-shift; n > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(std::uint64_t per_mille) { return below(1000) < per_mille; }
  template <typename Array>
  const char* pick(const Array& a) {
    return a[below(a.size())];
  }

 private:
  std::mt19937_64 engine_;
};

template <std::size_t N>
std::array<std::size_t, N> apportion(std::size_t total, const std::array<std::size_t, N>& shares,
                                     std::size_t absorber) {
  std::array<std::size_t, N> counts{};
  std::size_t sum = 0;
  for (std::size_t i = 0; i < N; ++i) {
    counts[i] = std::max<std::size_t>(1, total * shares[i] / 1000);
    sum += counts[i];
  }
  if (sum < total) {
    counts[absorber] += total - sum;
  }
  // Over-allocation only happens at tiny totals; take it back from the
  // largest buckets without emptying any.
  while (sum > total) {
    std::size_t largest = 0;
    for (std::size_t i = 1; i < N; ++i) {
      if (counts[i] > counts[largest]) largest = i;
    }
    --counts[largest];
    --sum;
  }
  return counts;
}

struct Sink {
  std::function<void(std::size_t type, std::span<const Value> cells)> vertex;
  std::function<void(std::size_t type, RowIndex source, RowIndex target,
                     std::span<const Value> cells)>
      edge;
};

void generate(const GeneratorOptions& options, const Schema& schema, const Sink& sink) {
  if (options.scale < kMinimumScale) {
    throw Error(ErrorCode::kInvalidSpec, "scale " + std::to_string(options.scale) +
                                             " is too small to populate all " +
                                             std::to_string(kMinimumScale) + " vertex types");
  }
  if (options.scale * kEdgesPerVertex > std::numeric_limits<RowIndex>::max()) {
    throw Error(ErrorCode::kInvalidSpec, "scale " + std::to_string(options.scale) + " is too large");
  }
  Random rng(options.seed);

  const auto vertex_counts = apportion(options.scale, kVertexShares, kPerson);
  std::array<RowIndex, kVertexTypeCount> first{};
  RowIndex next = 0;
  for (std::size_t t = 0; t < kVertexTypeCount; ++t) {
    first[t] = next;
    next += static_cast<RowIndex>(vertex_counts[t]);
  }

  auto vindex = [&](const char* name) {
    return *schema.attribute_index(ElementClass::kVertex, name);
  };
  const std::size_t a_firstname = vindex("firstname"), a_lastname = vindex("lastname"),
                    a_gender = vindex("gender"), a_birthday = vindex("birthday"),
                    a_age = vindex("age"), a_join = vindex("joinDate"),
                    a_location = vindex("location"), a_verified = vindex("verified"),
                    a_name = vindex("name"), a_content = vindex("content"),
                    a_length = vindex("length"), a_language = vindex("language"),
                    a_created = vindex("creationDate");
  const std::size_t e_created = *schema.attribute_index(ElementClass::kEdge, "creationDate");
  const std::size_t e_weight = *schema.attribute_index(ElementClass::kEdge, "weight");

  std::vector<Value> cells(schema.attributes(ElementClass::kVertex).size());
  auto sentence = [&](std::size_t words) {
    std::string out;
    for (std::size_t i = 0; i < words; ++i) {
      if (i) out.push_back(' ');
      out += rng.pick(kWords);
    }
    return out;
  };

  for (std::size_t t = 0; t < kVertexTypeCount; ++t) {
    for (std::size_t k = 0; k < vertex_counts[t]; ++k) {
      std::fill(cells.begin(), cells.end(), Value{});
      const std::int64_t created = rng.between(kEpoch2005, kEpoch2013);
      switch (static_cast<VertexType>(t)) {
        case kPerson: {
          const std::int64_t age = rng.between(14, 70);
          cells[a_firstname] = Value::Text(rng.pick(kFirstNames));
          cells[a_lastname] = Value::Text(rng.pick(kLastNames));
          cells[a_gender] = Value::Text(rng.chance(500) ? "female" : "male");
          cells[a_age] = Value::Int(age);
          cells[a_birthday] =
              Value::Time(kEpoch2013 - age * 365 * kSecondsPerDay - rng.between(0, 364) * kSecondsPerDay);
          cells[a_join] = Value::Time(created);
          cells[a_location] =
              Value::Text(rng.chance(250) ? "United States" : rng.pick(kOtherCountries));
          cells[a_verified] = Value::Bool(rng.chance(500));
          break;
        }
        case kForum:
          cells[a_name] = Value::Text("Group for " + sentence(2));
          cells[a_created] = Value::Time(created);
          break;
        case kPost:
        case kComment: {
          const std::string text = sentence(3 + rng.below(6));
          cells[a_length] = Value::Int(static_cast<std::int64_t>(text.size()));
          cells[a_content] = Value::Text(text);
          cells[a_created] = Value::Time(created);
          if (t == kPost) cells[a_language] = Value::Text(rng.pick(kLanguages));
          break;
        }
        case kTag:
          cells[a_name] = Value::Text(std::string(rng.pick(kWords)) + "_" + std::to_string(k));
          break;
        case kTagClass:
          cells[a_name] = Value::Text("class_" + std::to_string(k));
          break;
        case kPlace:
          cells[a_name] = Value::Text(k == 0 ? "United States"
                                             : std::string(kOtherCountries[k % kOtherCountries.size()]) +
                                                   (k < 11 ? "" : "_" + std::to_string(k)));
          break;
        case kOrganisation:
          cells[a_name] = Value::Text((rng.chance(500) ? "University of " : "Company ") +
                                      std::string(rng.pick(kWords)) + " " + std::to_string(k));
          break;
        case kVertexTypeCount:
          break;
      }
      sink.vertex(t, cells);
    }
  }

  std::array<std::size_t, kEdgeShapes.size()> edge_shares{};
  for (std::size_t i = 0; i < kEdgeShapes.size(); ++i) edge_shares[i] = kEdgeShapes[i].share;
  const auto edge_counts = apportion(options.scale * kEdgesPerVertex, edge_shares, 0);

  std::vector<Value> edge_cells(schema.attributes(ElementClass::kEdge).size());
  for (std::size_t t = 0; t < kEdgeShapes.size(); ++t) {
    const EdgeShape& shape = kEdgeShapes[t];
    const auto src_n = vertex_counts[shape.source];
    const auto dst_n = vertex_counts[shape.target];
    for (std::size_t k = 0; k < edge_counts[t]; ++k) {
      auto s = static_cast<RowIndex>(rng.below(src_n));
      auto d = static_cast<RowIndex>(rng.below(dst_n));
      if (shape.source == shape.target && s == d && dst_n > 1) {
        d = static_cast<RowIndex>((d + 1) % dst_n);
      }
      std::fill(edge_cells.begin(), edge_cells.end(), Value{});
      edge_cells[e_created] = Value::Time(rng.between(kEpoch2005, kEpoch2013));
      if (t == 0) edge_cells[e_weight] = Value::Float(static_cast<double>(rng.below(1000)) / 1000.0);
      sink.edge(t, first[shape.source] + s, first[shape.target] + d, edge_cells);
    }
  }
}

}  // namespace

Schema snb_schema() {
  std::vector<std::string> vtypes(kVertexTypeNames.begin(), kVertexTypeNames.end());
  std::vector<std::string> etypes;
  for (const auto& s : kEdgeShapes) etypes.emplace_back(s.name);
  return Schema(std::move(vtypes), std::move(etypes),
                {{"firstname", ValueTag::kText},
                 {"lastname", ValueTag::kText},
                 {"gender", ValueTag::kText},
                 {"birthday", ValueTag::kTimestamp},
                 {"age", ValueTag::kInt},
                 {"joinDate", ValueTag::kTimestamp},
                 {"location", ValueTag::kText},
                 {"verified", ValueTag::kBool},
                 {"name", ValueTag::kText},
                 {"content", ValueTag::kText},
                 {"length", ValueTag::kInt},
                 {"language", ValueTag::kText},
                 {"creationDate", ValueTag::kTimestamp}},
                {{"creationDate", ValueTag::kTimestamp}, {"weight", ValueTag::kFloat}});
}

std::shared_ptr<Dataset> generate_dataset(const GeneratorOptions& options) {
  const Schema schema = snb_schema();
  DatasetBuilder builder(options.name, schema);
  builder.reserve(options.scale, options.scale * kEdgesPerVertex);
  Sink sink{
      [&](std::size_t type, std::span<const Value> cells) { builder.add_vertex(type, cells); },
      [&](std::size_t type, RowIndex s, RowIndex t, std::span<const Value> cells) {
        builder.add_edge(type, s, t, cells);
      }};
  generate(options, schema, sink);
  return std::move(builder).build();
}

void generate_files(const GeneratorOptions& options, const fs::path& directory) {
  const Schema schema = snb_schema();
  if (options.scale < kMinimumScale) {
    // Fail before touching the filesystem.
    generate(options, schema, Sink{});
  }
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + directory.string() + ": " + ec.message());

  struct File {
    std::string name;
    std::ofstream out;
    std::unique_ptr<csv::Writer> writer;
    std::vector<std::size_t> columns;
  };
  auto open = [&](std::string name, ElementClass cls, std::vector<std::string> attrs) {
    auto f = std::make_unique<File>();
    f->name = std::move(name);
    f->out.open(directory / f->name, std::ios::binary | std::ios::trunc);
    if (!f->out) throw Error(ErrorCode::kIoError, "cannot create " + (directory / f->name).string());
    f->writer = std::make_unique<csv::Writer>(f->out);
    f->writer->field("id");
    if (cls == ElementClass::kEdge) {
      f->writer->field("source");
      f->writer->field("target");
    }
    for (const auto& a : attrs) {
      f->writer->field(a);
      f->columns.push_back(*schema.attribute_index(cls, a));
    }
    f->writer->end_row();
    return f;
  };

  const std::array<std::vector<std::string>, kVertexTypeCount> vertex_columns = {{
      {"firstname", "lastname", "gender", "birthday", "age", "joinDate", "location", "verified"},
      {"name", "creationDate"},
      {"content", "length", "language", "creationDate"},
      {"content", "length", "creationDate"},
      {"name"},
      {"name"},
      {"name"},
      {"name"},
  }};

  std::vector<std::unique_ptr<File>> vfiles, efiles;
  nlohmann::ordered_json manifest = nlohmann::ordered_json::object();
  manifest["name"] = options.name;
  manifest["schema"] = "schema.json";
  manifest["vertices"] = nlohmann::ordered_json::array();
  manifest["edges"] = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < kVertexTypeCount; ++t) {
    vfiles.push_back(open(std::string("v_") + kVertexTypeNames[t] + ".csv", ElementClass::kVertex,
                          vertex_columns[t]));
    manifest["vertices"].push_back({{"type", kVertexTypeNames[t]}, {"file", vfiles.back()->name}});
  }
  for (std::size_t t = 0; t < kEdgeShapes.size(); ++t) {
    std::vector<std::string> cols = {"creationDate"};
    if (t == 0) cols.emplace_back("weight");
    efiles.push_back(
        open(std::string("e_") + kEdgeShapes[t].name + ".csv", ElementClass::kEdge, cols));
    manifest["edges"].push_back({{"type", kEdgeShapes[t].name}, {"file", efiles.back()->name}});
  }

  auto emit = [](File& f, std::span<const Value> cells) {
    for (std::size_t c : f.columns) {
      const Value& v = cells[c];
      f.writer->field(format_cell(v), v.is_absent());
    }
    f.writer->end_row();
  };
  RowIndex vertex_row = 0, edge_row = 0;
  Sink sink{[&](std::size_t type, std::span<const Value> cells) {
              File& f = *vfiles[type];
              f.writer->field(std::to_string(vertex_row++));
              emit(f, cells);
            },
            [&](std::size_t type, RowIndex s, RowIndex t, std::span<const Value> cells) {
              File& f = *efiles[type];
              f.writer->field(std::to_string(edge_row++));
              f.writer->field(std::to_string(s));
              f.writer->field(std::to_string(t));
              emit(f, cells);
            }};
  generate(options, schema, sink);

  for (auto* group : {&vfiles, &efiles}) {
    for (auto& f : *group) {
      f->out.flush();
      if (!f->out) throw Error(ErrorCode::kIoError, "cannot write " + f->name);
    }
  }
  std::ofstream(directory / "schema.json", std::ios::binary | std::ios::trunc) << schema_to_json(schema);
  std::ofstream(directory / "manifest.json", std::ios::binary | std::ios::trunc)
      << manifest.dump(2) << "\n";
}

}  // namespace pausegraph
