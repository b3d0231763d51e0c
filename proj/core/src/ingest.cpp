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

#include "pausegraph/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "pausegraph/csv.hpp"
#include "pausegraph/error.hpp"

namespace pausegraph {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidSpec, what + ": " + e.what());
  }
}

std::vector<AttributeDecl> decode_attributes(const Json& list) {
  std::vector<AttributeDecl> out;
  for (const auto& entry : list) {
    const auto name = entry.at("name").get<std::string>();
    const auto tag_text = entry.at("type").get<std::string>();
    auto tag = parse_value_tag(tag_text);
    if (!tag) {
      throw Error(ErrorCode::kInvalidSpec,
                  "attribute '" + name + "' has unknown type '" + tag_text + "'");
    }
    out.push_back({name, *tag});
  }
  return out;
}

Json encode_attributes(const Schema& schema, ElementClass cls) {
  Json out = Json::array();
  const auto& attrs = schema.attributes(cls);
  for (std::size_t i = 1; i < attrs.size(); ++i) {
    out.push_back({{"name", attrs[i].name}, {"type", std::string(to_string(attrs[i].tag))}});
  }
  return out;
}

Schema decode_schema(const Json& j) {
  try {
    auto strings = [&](const char* key) {
      return j.contains(key) ? j.at(key).get<std::vector<std::string>>()
                             : std::vector<std::string>{};
    };
    auto attrs = [&](const char* key) {
      return j.contains(key) ? decode_attributes(j.at(key)) : std::vector<AttributeDecl>{};
    };
    return Schema(strings("vertex_types"), strings("edge_types"), attrs("vertex_attributes"),
                  attrs("edge_attributes"));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("malformed schema: ") + e.what());
  }
}

std::vector<TypedFile> decode_files(const Json& j, const char* key) {
  std::vector<TypedFile> out;
  if (!j.contains(key)) return out;
  for (const auto& entry : j.at(key)) {
    out.push_back({entry.at("type").get<std::string>(), entry.at("file").get<std::string>()});
  }
  return out;
}

struct ColumnBinding {
  enum Role { kAttribute, kId, kSource, kTarget } role = kAttribute;
  std::size_t attribute = 0;
  ValueTag tag = ValueTag::kText;
};

std::string location(const fs::path& file, std::size_t line) {
  return file.filename().string() + " line " + std::to_string(line);
}

std::vector<ColumnBinding> bind_header(const Schema& schema, ElementClass cls,
                                       const std::vector<csv::Field>& header,
                                       const fs::path& file) {
  std::vector<ColumnBinding> out;
  bool has_id = false, has_source = false, has_target = false;
  for (const auto& field : header) {
    const std::string& name = field.text;
    ColumnBinding b;
    if (name == "id") {
      b.role = ColumnBinding::kId;
      has_id = true;
    } else if (cls == ElementClass::kEdge && name == "source") {
      b.role = ColumnBinding::kSource;
      has_source = true;
    } else if (cls == ElementClass::kEdge && name == "target") {
      b.role = ColumnBinding::kTarget;
      has_target = true;
    } else {
      auto index = schema.attribute_index(cls, name);
      if (!index || *index == 0) {
        throw Error(ErrorCode::kInvalidSpec, "header mismatch in " + file.filename().string() +
                                                 ": column '" + name +
                                                 "' is not a declared attribute");
      }
      b.attribute = *index;
      b.tag = schema.attributes(cls)[*index].tag;
    }
    for (const auto& prev : out) {
      if (prev.role == b.role && (b.role != ColumnBinding::kAttribute ||
                                  prev.attribute == b.attribute)) {
        throw Error(ErrorCode::kInvalidSpec, "header mismatch in " + file.filename().string() +
                                                 ": duplicate column '" + name + "'");
      }
    }
    out.push_back(b);
  }
  auto missing = [&](const char* col) {
    throw Error(ErrorCode::kInvalidSpec, "header mismatch in " + file.filename().string() +
                                             ": missing column '" + col + "'");
  };
  if (cls == ElementClass::kVertex && !has_id) missing("id");
  if (cls == ElementClass::kEdge && !has_source) missing("source");
  if (cls == ElementClass::kEdge && !has_target) missing("target");
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::int64_t require_int(const csv::Field& field, const fs::path& file, std::size_t line,
                         const char* column) {
  auto v = parse_int(field.text);
  if (!v) {
    throw Error(ErrorCode::kInvalidSpec, location(file, line) + ": column '" + column +
                                             "' expects an integer, got '" + field.text + "'");
  }
  return *v;
}

void open_csv(const fs::path& path, std::ifstream& in) {
  in.open(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
}

}  // namespace

std::string format_cell(const Value& value) {
  if (value.is_absent()) return {};
  char buf[64];
  switch (*value.tag()) {
    case ValueTag::kInt: {
      auto r = std::to_chars(buf, buf + sizeof buf, value.as_int());
      return std::string(buf, r.ptr);
    }
    case ValueTag::kFloat: {
      auto r = std::to_chars(buf, buf + sizeof buf, value.as_float());
      return std::string(buf, r.ptr);
    }
    case ValueTag::kText:
      return value.as_text();
    case ValueTag::kBool:
      return value.as_bool() ? "true" : "false";
    case ValueTag::kTimestamp: {
      auto r = std::to_chars(buf, buf + sizeof buf, value.as_timestamp().seconds);
      return std::string(buf, r.ptr);
    }
  }
  return {};
}

std::optional<Value> parse_cell(std::string_view text, ValueTag tag) {
  switch (tag) {
    case ValueTag::kInt:
      if (auto v = parse_int(text)) return Value::Int(*v);
      return std::nullopt;
    case ValueTag::kTimestamp:
      if (auto v = parse_int(text)) return Value::Time(*v);
      return std::nullopt;
    case ValueTag::kFloat: {
      double d = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
      if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
      return Value::Float(d);
    }
    case ValueTag::kText:
      return Value::Text(std::string(text));
    case ValueTag::kBool:
      if (text == "true") return Value::Bool(true);
      if (text == "false") return Value::Bool(false);
      return std::nullopt;
  }
  return std::nullopt;
}

Schema schema_from_json(std::string_view text) {
  return decode_schema(parse_json(text, "malformed schema"));
}

std::string schema_to_json(const Schema& schema) {
  Json j = Json::object();
  j["vertex_types"] = schema.types(ElementClass::kVertex);
  j["edge_types"] = schema.types(ElementClass::kEdge);
  j["vertex_attributes"] = encode_attributes(schema, ElementClass::kVertex);
  j["edge_attributes"] = encode_attributes(schema, ElementClass::kEdge);
  return j.dump(2) + "\n";
}

DatasetManifest read_manifest(const fs::path& path) {
  const Json j = parse_json(read_text(path), "malformed manifest " + path.string());
  DatasetManifest m;
  try {
    m.name = j.contains("name") ? j.at("name").get<std::string>() : path.parent_path().filename().string();
    const Json& schema = j.at("schema");
    if (schema.is_string()) {
      const fs::path schema_path = path.parent_path() / schema.get<std::string>();
      m.schema = decode_schema(parse_json(read_text(schema_path), "malformed schema " + schema_path.string()));
    } else {
      m.schema = decode_schema(schema);
    }
    m.vertices = decode_files(j, "vertices");
    m.edges = decode_files(j, "edges");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, "malformed manifest " + path.string() + ": " + e.what());
  }
  return m;
}

std::shared_ptr<Dataset> load_manifest(const fs::path& path) {
  return load_manifest(read_manifest(path), path.parent_path());
}

std::shared_ptr<Dataset> load_manifest(const DatasetManifest& manifest, const fs::path& base_dir) {
  const Schema& schema = manifest.schema;
  DatasetBuilder builder(manifest.name, schema);
  std::unordered_map<std::int64_t, RowIndex> vertex_rows;

  auto resolve_type = [&](ElementClass cls, const std::string& type) {
    auto index = schema.type_index(cls, type);
    if (!index) {
      throw Error(ErrorCode::kInvalidSpec, "manifest names undeclared " +
                                               std::string(to_string(cls)) + " type '" + type + "'");
    }
    return *index;
  };

  std::vector<csv::Field> row;
  for (ElementClass cls : {ElementClass::kVertex, ElementClass::kEdge}) {
    const auto& files = cls == ElementClass::kVertex ? manifest.vertices : manifest.edges;
    std::vector<Value> cells(schema.attributes(cls).size());
    for (const auto& entry : files) {
      const std::size_t type = resolve_type(cls, entry.type);
      const fs::path path = entry.file.is_absolute() ? entry.file : base_dir / entry.file;
      std::ifstream in;
      open_csv(path, in);
      csv::Reader reader(in);
      if (!reader.next_row(row)) continue;
      if (row.size() == 1 && row[0].text.empty() && !row[0].quoted) continue;
      const auto bindings = bind_header(schema, cls, row, path);
      while (reader.next_row(row)) {
        const std::size_t line = reader.line();
        if (row.size() == 1 && row[0].text.empty() && !row[0].quoted) continue;
        if (row.size() != bindings.size()) {
          throw Error(ErrorCode::kInvalidSpec, location(path, line) + ": expected " +
                                                   std::to_string(bindings.size()) +
                                                   " fields, found " + std::to_string(row.size()));
        }
        std::fill(cells.begin(), cells.end(), Value{});
        std::optional<std::int64_t> id;
        RowIndex endpoints[2] = {0, 0};
        for (std::size_t c = 0; c < row.size(); ++c) {
          const auto& b = bindings[c];
          const auto& field = row[c];
          switch (b.role) {
            case ColumnBinding::kId:
              id = require_int(field, path, line, "id");
              break;
            case ColumnBinding::kSource:
            case ColumnBinding::kTarget: {
              const bool is_source = b.role == ColumnBinding::kSource;
              const char* col = is_source ? "source" : "target";
              const auto ext = require_int(field, path, line, col);
              auto it = vertex_rows.find(ext);
              if (it == vertex_rows.end()) {
                throw Error(ErrorCode::kDanglingEdge, location(path, line) + ": " + col + " " +
                                                          std::to_string(ext) +
                                                          " does not name a vertex");
              }
              endpoints[is_source ? 0 : 1] = it->second;
              break;
            }
            case ColumnBinding::kAttribute: {
              if (field.text.empty() && !field.quoted) break;
              auto v = parse_cell(field.text, b.tag);
              if (!v) {
                throw Error(ErrorCode::kInvalidSpec,
                            location(path, line) + ": column '" +
                                schema.attributes(cls)[b.attribute].name + "' expects " +
                                std::string(to_string(b.tag)) + ", got '" + field.text + "'");
              }
              cells[b.attribute] = std::move(*v);
              break;
            }
          }
        }
        if (cls == ElementClass::kVertex) {
          const VertexId v = builder.add_vertex(type, cells);
          if (!vertex_rows.emplace(*id, v.row).second) {
            throw Error(ErrorCode::kInvalidSpec,
                        location(path, line) + ": duplicate vertex id " + std::to_string(*id));
          }
        } else {
          builder.add_edge(type, endpoints[0], endpoints[1], cells);
        }
      }
    }
  }
  return std::move(builder).build();
}

void export_dataset(const Dataset& dataset, const fs::path& directory) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + directory.string() + ": " + ec.message());

  auto lock = dataset.read_lock();
  const Schema& schema = dataset.schema();

  auto write = [](const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  };

  Json manifest = Json::object();
  manifest["name"] = dataset.name();
  manifest["schema"] = "schema.json";
  manifest["vertices"] = Json::array();
  manifest["edges"] = Json::array();

  for (ElementClass cls : {ElementClass::kVertex, ElementClass::kEdge}) {
    const auto& types = schema.types(cls);
    const auto& attrs = schema.attributes(cls);
    const bool vertex = cls == ElementClass::kVertex;
    for (const auto& type : types) {
      std::vector<RowIndex> rows;
      for (RowIndex r = 0; r < dataset.row_count(cls); ++r) {
        const ElementRef e{cls, r};
        if (dataset.is_live(e) && dataset.type_name(e) == type) rows.push_back(r);
      }
      std::vector<std::size_t> used;
      for (std::size_t a = 1; a < attrs.size(); ++a) {
        for (RowIndex r : rows) {
          if (!dataset.cell(ElementRef{cls, r}, a).is_absent()) {
            used.push_back(a);
            break;
          }
        }
      }
      std::ostringstream out;
      csv::Writer w(out);
      w.field("id");
      if (!vertex) {
        w.field("source");
        w.field("target");
      }
      for (std::size_t a : used) w.field(attrs[a].name);
      w.end_row();
      for (RowIndex r : rows) {
        const ElementRef e{cls, r};
        w.field(std::to_string(r));
        if (!vertex) {
          w.field(std::to_string(dataset.source(EdgeId{r}).row));
          w.field(std::to_string(dataset.target(EdgeId{r}).row));
        }
        for (std::size_t a : used) {
          const Value v = dataset.cell(e, a);
          w.field(format_cell(v), v.is_absent());
        }
        w.end_row();
      }
      const std::string file = std::string(vertex ? "v_" : "e_") + type + ".csv";
      write(directory / file, out.str());
      manifest[vertex ? "vertices" : "edges"].push_back({{"type", type}, {"file", file}});
    }
  }
  write(directory / "schema.json", schema_to_json(schema));
  write(directory / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace pausegraph
