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

#include "pausegraph/script.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pausegraph/error.hpp"
#include "pausegraph/subgraph_view.hpp"
#include "pausegraph/wire.hpp"

namespace pausegraph {

namespace fs = std::filesystem;
using wire::Json;

namespace {

constexpr std::array<std::string_view, 9> kVerbs = {
    "create-session", "continue", "expand", "estimate", "fetch",
    "bookmark",       "restore",  "stop",   "status"};

constexpr std::array<std::string_view, 8> kVariables = {
    "session",   "bookmark", "match",         "match.id",
    "delta.vertices", "delta.edges", "view.vertices", "view.edges"};

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kInvalidSpec, "line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

/// Replaces each $variable in `text` with lookup(name). Names are matched
/// greedily, then trimmed back to the longest known variable.
template <typename Lookup>
std::string substitute(std::string_view text, std::size_t line, Lookup&& lookup) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '$') {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && is_name_char(text[end])) ++end;
    std::string_view name = text.substr(i + 1, end - i - 1);
    while (!name.empty() &&
           std::find(kVariables.begin(), kVariables.end(), name) == kVariables.end()) {
      const auto dot = name.rfind('.');
      if (dot == std::string_view::npos) {
        name = {};
      } else {
        name = name.substr(0, dot);
      }
    }
    if (name.empty()) fail_at(line, "unknown variable in '" + std::string(text.substr(i, end - i)) + "'");
    out += lookup(name);
    i += 1 + name.size();
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t line, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail_at(line, std::string(what) + " must be a non-negative integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    fail_at(line, std::string(what) + " is out of range");
  }
}

void parse_directive(Script& script, std::string_view body, std::size_t line,
                     const fs::path& base_dir, bool commands_started) {
  if (commands_started) fail_at(line, "directives must precede commands");
  const auto words = split_words(body);
  if (words.empty()) fail_at(line, "empty directive");
  if (words[0] == "dataset") {
    if (script.dataset) fail_at(line, "duplicate @dataset");
    DatasetSource src;
    if (words.size() >= 2 && words[1] == "generate" && (words.size() == 4 || words.size() == 5)) {
      src.kind = DatasetSource::Kind::kGenerate;
      src.generate.seed = parse_unsigned(words[2], line, "seed");
      src.generate.scale = parse_unsigned(words[3], line, "scale");
      if (words.size() == 5) src.generate.name = words[4];
    } else if (words.size() == 3 && words[1] == "load") {
      src.kind = DatasetSource::Kind::kManifest;
      fs::path p(words[2]);
      src.manifest = p.is_absolute() ? p : base_dir / p;
    } else {
      fail_at(line, "expected '@dataset generate <seed> <scale> [name]' or '@dataset load <manifest>'");
    }
    script.dataset = std::move(src);
  } else if (words[0] == "clock") {
    if (words.size() != 2) fail_at(line, "expected '@clock <seconds>'");
    script.clock = static_cast<std::int64_t>(parse_unsigned(words[1], line, "clock"));
  } else {
    fail_at(line, "unknown directive '@" + words[0] + "'");
  }
}

void check_argument(const ScriptCommand& cmd) {
  const std::string_view verb = cmd.verb;
  const bool needs_json = verb == "create-session" || verb == "expand" || verb == "estimate" ||
                          verb == "fetch";
  const bool takes_none = verb == "continue" || verb == "stop" || verb == "status";
  if (takes_none && !cmd.argument.empty()) fail_at(cmd.line, "'" + cmd.verb + "' takes no argument");
  if (needs_json && cmd.argument.empty()) fail_at(cmd.line, "'" + cmd.verb + "' needs a JSON argument");
  if (verb == "restore") {
    if (split_words(cmd.argument).size() > 1) fail_at(cmd.line, "'restore' takes one bookmark id");
    substitute(cmd.argument, cmd.line, [](std::string_view) { return std::string("x"); });
    return;
  }
  if (needs_json || (verb == "bookmark" && !cmd.argument.empty())) {
    const std::string probe =
        substitute(cmd.argument, cmd.line, [](std::string_view) { return std::string("0"); });
    if (!Json::accept(probe)) fail_at(cmd.line, "argument of '" + cmd.verb + "' is not valid JSON");
    if (verb == "bookmark") {
      const Json j = Json::parse(probe);
      if (!j.is_string() && !j.is_null()) {
        fail_at(cmd.line, "bookmark description must be a JSON string or null");
      }
    } else if (!Json::parse(probe).is_object()) {
      fail_at(cmd.line, "argument of '" + cmd.verb + "' must be a JSON object");
    }
  }
}

}  // namespace

Script parse_script(std::string_view text, const fs::path& base_dir) {
  Script script;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (nl == std::string_view::npos && raw.empty()) break;
    script.lines.emplace_back(raw);
    pos = end + 1;
  }

  bool have_session = false;
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view s = trim(script.lines[i]);
    if (s.empty() || s.front() == '#') continue;
    if (s.front() == '@') {
      parse_directive(script, s.substr(1), line, base_dir, !script.commands.empty());
      continue;
    }
    if (s.front() == '>') {
      if (script.commands.empty()) fail_at(line, "expected block without a command");
      auto& cmd = script.commands.back();
      if (cmd.expected) fail_at(line, "second expected block for one command");
      cmd.expected = std::string(trim(s.substr(1)));
      continue;
    }
    ScriptCommand cmd;
    cmd.line = line;
    const auto space = s.find_first_of(" \t");
    cmd.verb = std::string(s.substr(0, space));
    if (space != std::string_view::npos) cmd.argument = std::string(trim(s.substr(space)));
    if (std::find(kVerbs.begin(), kVerbs.end(), cmd.verb) == kVerbs.end()) {
      fail_at(line, "unknown command '" + cmd.verb + "'");
    }
    if (cmd.verb == "create-session") {
      if (have_session) fail_at(line, "a script opens exactly one session");
      have_session = true;
    } else if (!have_session) {
      fail_at(line, "'" + cmd.verb + "' before create-session");
    }
    check_argument(cmd);
    script.commands.push_back(std::move(cmd));
  }
  return script;
}

Script read_script(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open script " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str(), path.parent_path());
}

std::string render_response(const HttpResponse& response) {
  return std::to_string(response.status) + " " + response.body;
}

namespace {

struct ReplayState {
  std::optional<std::string> session;
  std::optional<std::string> bookmark;
  std::optional<ElementRef> match;
  std::optional<SubgraphDelta> delta;
  SubgraphView view;

  std::string lookup(std::string_view name) const {
    auto elements = [](auto&& items, auto&& to_ref) {
      Json a = Json::array();
      for (const auto& item : items) a.push_back(wire::encode_element(to_ref(item)));
      return a.dump();
    };
    if (name == "session") return session ? Json(*session).dump() : "null";
    if (name == "bookmark") return bookmark ? Json(*bookmark).dump() : "null";
    if (name == "match") return match ? wire::encode_element(*match).dump() : "null";
    if (name == "match.id") return match ? std::to_string(match->row) : "null";
    if (name == "delta.vertices") {
      if (!delta) return "null";
      return elements(delta->vertices, [](const DeltaVertex& v) { return ElementRef::of(v.id); });
    }
    if (name == "delta.edges") {
      if (!delta) return "null";
      return elements(delta->edges, [](const DeltaEdge& e) { return ElementRef::of(e.id); });
    }
    if (name == "view.vertices") {
      return elements(view.vertices(), [](const ViewVertex& v) { return ElementRef::of(v.id); });
    }
    return elements(view.edges(), [](const ViewEdge& e) { return ElementRef::of(e.id); });
  }

  // Raw token for path segments: ids without JSON quoting.
  std::string path_token(std::string_view name) const {
    if (name == "session") return session.value_or("null");
    if (name == "bookmark") return bookmark.value_or("null");
    return lookup(name);
  }

  void absorb(const ScriptCommand& cmd, const HttpResponse& response) {
    Json envelope;
    try {
      envelope = Json::parse(response.body);
    } catch (const Json::exception&) {
      return;
    }
    if (!envelope.is_object() || !envelope.value("ok", false) || !envelope.contains("data")) return;
    const Json& data = envelope.at("data");
    try {
      if (cmd.verb == "create-session") {
        session = data.at("session_id").get<std::string>();
      } else if (cmd.verb == "continue") {
        PauseEvent ev = wire::decode_pause_event(data);
        if (const auto* m = std::get_if<MatchEvent>(&ev)) {
          match = m->element;
          view.merge(*m);
        }
      } else if (cmd.verb == "expand") {
        delta = wire::decode_delta(data);
        view.merge(*delta);
      } else if (cmd.verb == "fetch") {
        view.merge(wire::decode_fetch_result(data));
      } else if (cmd.verb == "bookmark") {
        bookmark = data.at("id").get<std::string>();
      }
    } catch (const std::exception&) {
      // A response the replayer cannot interpret binds nothing.
    }
  }
};

}  // namespace

ReplayReport replay(const Script& script, Transport& transport, bool golden) {
  ReplayReport report;
  ReplayState state;
  for (std::size_t i = 0; i < script.commands.size(); ++i) {
    const ScriptCommand& cmd = script.commands[i];
    auto json_arg = [&] {
      return substitute(cmd.argument, cmd.line, [&](std::string_view n) { return state.lookup(n); });
    };
    const std::string prefix = "/api/sessions/" + state.session.value_or("null");

    Exchange ex;
    ex.method = "POST";
    if (cmd.verb == "create-session") {
      ex.target = "/api/sessions";
      ex.body = json_arg();
    } else if (cmd.verb == "continue" || cmd.verb == "stop") {
      ex.target = prefix + "/" + cmd.verb;
    } else if (cmd.verb == "status") {
      ex.method = "GET";
      ex.target = prefix;
    } else if (cmd.verb == "expand" || cmd.verb == "estimate") {
      ex.target = prefix + "/" + cmd.verb;
      ex.body = json_arg();
    } else if (cmd.verb == "fetch") {
      ex.target = prefix + "/attributes";
      ex.body = json_arg();
    } else if (cmd.verb == "bookmark") {
      Json body = Json::object();
      body["payload"] = wire::encode_view(state.view);
      body["description"] = cmd.argument.empty() ? Json(nullptr) : Json::parse(json_arg());
      ex.target = prefix + "/bookmarks";
      ex.body = body.dump();
    } else {  // restore
      const std::string arg = cmd.argument.empty() ? "$bookmark" : cmd.argument;
      const std::string id =
          substitute(arg, cmd.line, [&](std::string_view n) { return state.path_token(n); });
      ex.target = prefix + "/bookmarks/" + id + "/restore";
    }

    ex.response = transport.send(ex.method, ex.target, ex.body);
    state.absorb(cmd, ex.response);
    const std::string actual = render_response(ex.response);
    report.exchanges.push_back(std::move(ex));

    if (golden && cmd.expected && *cmd.expected != actual) {
      report.divergence = Divergence{i + 1, cmd.line, *cmd.expected, actual};
      break;
    }
  }
  return report;
}

std::string record(const Script& script, const ReplayReport& report) {
  std::vector<std::string> responses(script.lines.size() + 1);
  std::vector<bool> has_response(script.lines.size() + 1, false);
  for (std::size_t i = 0; i < script.commands.size() && i < report.exchanges.size(); ++i) {
    responses[script.commands[i].line] = render_response(report.exchanges[i].response);
    has_response[script.commands[i].line] = true;
  }
  std::string out;
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    const std::string_view s = trim(script.lines[i]);
    if (!s.empty() && s.front() == '>') continue;
    out += script.lines[i];
    out.push_back('\n');
    if (has_response[i + 1]) {
      out += "> " + responses[i + 1];
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace pausegraph
