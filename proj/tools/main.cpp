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

#include <unistd.h>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "pausegraph/config.hpp"
#include "pausegraph/error.hpp"
#include "pausegraph/generator.hpp"
#include "pausegraph/http_server.hpp"
#include "pausegraph/ingest.hpp"
#include "pausegraph/script.hpp"
#include "pausegraph/service.hpp"

namespace fs = std::filesystem;
using namespace pausegraph;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int cmd_load(const fs::path& manifest) {
  auto dataset = load_manifest(manifest);
  std::cout << dataset->name() << ": " << dataset->vertex_count() << " vertices, "
            << dataset->edge_count() << " edges\n";
  return 0;
}

int cmd_generate(const GeneratorOptions& options, const fs::path& out) {
  generate_files(options, out);
  std::cout << "wrote " << options.scale << " vertices, " << options.scale * kEdgesPerVertex
            << " edges to " << out.string() << "\n";
  return 0;
}

// Scratch bookmark repository that lives for one replay.
class ScratchDirectory {
 public:
  ScratchDirectory() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("pausegraph-replay-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
  }
  ~ScratchDirectory() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct ReplayArgs {
  fs::path script;
  bool golden = false;
  bool record = false;
  std::string url;
  std::optional<fs::path> manifest;
  std::optional<fs::path> repository;
  bool verbose = false;
};

int cmd_replay(const ReplayArgs& args) {
  const Script script = read_script(args.script);

  ReplayReport report;
  if (!args.url.empty()) {
    HttpClientTransport transport(args.url);
    report = replay(script, transport, args.golden);
  } else {
    std::optional<DatasetSource> source = script.dataset;
    if (args.manifest) {
      source = DatasetSource{DatasetSource::Kind::kManifest, *args.manifest, {}};
    }
    if (!source) {
      throw Error(ErrorCode::kInvalidSpec,
                  "no dataset: add an @dataset directive or pass --manifest");
    }
    ScratchDirectory scratch;
    ServiceOptions options;
    options.repository = args.repository.value_or(scratch.path());
    if (script.clock) {
      const std::int64_t t = *script.clock;
      options.clock = [t] { return t; };
    }
    Service service(options);
    service.add_dataset(source->load());
    ServiceTransport transport(service);
    report = replay(script, transport, args.golden);
  }

  if (args.verbose || (!args.golden && !args.record)) {
    for (std::size_t i = 0; i < report.exchanges.size(); ++i) {
      const auto& ex = report.exchanges[i];
      std::cout << "[" << i + 1 << "] " << ex.method << " " << ex.target << "\n"
                << render_response(ex.response) << "\n";
    }
  }
  if (args.record) {
    const std::string text = record(script, report);
    std::ofstream out(args.script, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + args.script.string());
    std::cout << "recorded " << report.exchanges.size() << " responses into "
              << args.script.string() << "\n";
  }
  if (!report.passed()) {
    const auto& d = *report.divergence;
    std::cout << "FAIL: command " << d.command << " (line " << d.line << ") diverged\n"
              << "  expected: " << d.expected << "\n"
              << "  actual:   " << d.actual << "\n";
    return kExitFailure;
  }
  if (args.golden) {
    std::cout << "PASS: " << report.exchanges.size() << " commands match\n";
  }
  return 0;
}

int cmd_serve(const std::optional<fs::path>& config_path) {
  // Block termination signals before any thread starts so that only the
  // waiter below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const ServiceConfig config = load_config(config_path);
  ServiceOptions options;
  options.repository = config.repository;
  options.clock = config.clock();
  Service service(options);
  for (const auto& source : config.datasets) {
    auto dataset = source.load();
    std::cout << "loaded " << dataset->name() << ": " << dataset->vertex_count() << " vertices, "
              << dataset->edge_count() << " edges\n";
    service.add_dataset(std::move(dataset));
  }

  HttpServer server(service);
  const int port = server.bind(config.host, config.port);
  if (port < 0) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + config.host + ":" + std::to_string(config.port));
  }
  std::cout << "listening on http://" << config.host << ":" << port << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  const bool ok = server.serve();
  // serve() can return on its own (listen failure); wake the waiter.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pausegraph: pausable graph exploration service and tools"};
  app.require_subcommand(1);

  fs::path manifest;
  auto* load = app.add_subcommand("load", "Load a dataset manifest and print its size");
  load->add_option("manifest", manifest, "Path to manifest.json")->required();

  GeneratorOptions gen;
  fs::path gen_out;
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic social-network dataset");
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--scale", gen.scale, "Number of vertices (at least 8)")->required();
  generate->add_option("--out", gen_out, "Output directory")->required();
  generate->add_option("--name", gen.name, "Dataset name")->capture_default_str();

  ReplayArgs rargs;
  auto* replay_cmd = app.add_subcommand("replay", "Run an exploration script");
  replay_cmd->add_option("script", rargs.script, "Script file")->required();
  replay_cmd->add_flag("--golden", rargs.golden, "Compare responses with the expected blocks");
  replay_cmd->add_flag("--record", rargs.record, "Rewrite the expected blocks from this run");
  replay_cmd->add_option("--url", rargs.url, "Replay against a running service instead");
  replay_cmd->add_option("--manifest", rargs.manifest, "Dataset to load instead of @dataset");
  replay_cmd->add_option("--repository", rargs.repository,
                         "Bookmark directory (default: a scratch directory)");
  replay_cmd->add_flag("-v,--verbose", rargs.verbose, "Print every exchange");

  std::optional<fs::path> config;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--config", config, "Config file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (rargs.golden && rargs.record) {
    std::cerr << "--golden and --record are mutually exclusive\n";
    return kExitUsage;
  }

  try {
    if (*load) return cmd_load(manifest);
    if (*generate) return cmd_generate(gen, gen_out);
    if (*replay_cmd) return cmd_replay(rargs);
    if (*serve) return cmd_serve(config);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
