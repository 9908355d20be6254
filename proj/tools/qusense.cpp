// Copyright 2026 The qusense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qusense command-line front end.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qusense/cli/runner.hpp"

namespace {

using qusense::cli::json;

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kInvariant = 3 };

int fail(int code, const std::string& kind, const std::string& message,
         const json& diagnostics = json::array()) {
  json rec;
  rec["error"] = {{"code", code}, {"kind", kind}, {"message", message},
                  {"diagnostics", diagnostics}};
  std::cerr << rec.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = qusense::cli;

  CLI::App app{"Qudit QFT sensing simulator", "qusense"};
  app.set_version_flag("--version", std::string(QUSENSE_VERSION));
  std::string command;
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  app.add_option("command", command, "digitize|acfield|correlate|fisher|purity|run|validate")
      ->required()
      ->check(CLI::IsMember({"digitize", "acfield", "correlate", "fisher", "purity", "run",
                             "validate"}));
  app.add_option("--config", config_path, "experiment config (JSON)")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) return fail(kConfig, "io", "cannot read config file: " + config_path);
  std::stringstream buf;
  buf << in.rdbuf();

  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    return fail(kConfig, "config", std::string("invalid JSON: ") + e.what());
  }

  std::optional<cli::Experiment> expected;
  if (command != "run" && command != "validate") expected = cli::experiment_from_string(command);
  cli::ParseResult parsed = cli::parse_config(doc, expected);

  if (command == "validate") {
    std::cout << cli::diagnostics_json(parsed.diagnostics).dump(2) << '\n';
    return parsed.diagnostics.empty() ? kOk : kConfig;
  }
  if (!parsed.config) {
    return fail(kConfig, "config", "config has schema violations",
                cli::diagnostics_json(parsed.diagnostics));
  }

  cli::ExperimentConfig cfg = *parsed.config;
  if (seed) cfg.seed = *seed;
  if (format) cfg.format = *format;
  if (out_dir) cfg.out = *out_dir;

  try {
    const auto tables = cli::run_experiment(cfg);
    const auto files =
        cli::write_outputs(cfg, tables, cli::hex64(cli::fnv1a64(doc.dump())), cfg.out);
    json ok{{"status", "ok"}, {"experiment", std::string(cli::to_string(cfg.experiment))},
            {"out", cfg.out}, {"outputs", files}};
    std::cout << ok.dump() << '\n';
    return kOk;
  } catch (const qusense::invariant_error& e) {
    return fail(kInvariant, "invariant", e.what());
  } catch (const std::domain_error& e) {
    return fail(kInvariant, "invariant", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kConfig, "config", e.what());
  } catch (const std::length_error& e) {
    return fail(kConfig, "config", e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, "runtime", e.what());
  }
}
