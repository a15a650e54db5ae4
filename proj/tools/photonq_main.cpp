// Copyright 2026 The photonq authors.
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

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "photonq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"photonq: exact few-photon linear-optics experiments"};

  std::string experiment, config_path, out_path, format;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  bool seed_set = false;

  app.add_option("--experiment", experiment,
                 "experiment name (wstate-sweep, ghz4, double-singlet, hom, "
                 "symmetric4-scan, filter, cz-filter, filter-fidelity, rus, "
                 "teleport, timeresolve, dipole-correlation, infer-singlet, "
                 "reck-roundtrip)");
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--seed", seed, "seed for stochastic experiments")
      ->each([&seed_set](const std::string&) { seed_set = true; });
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv or jsonl");
  app.add_option("--param", params, "experiment parameter key=value")
      ->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? photonq::kExitConfigError : photonq::kExitOk;
  }

  photonq::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = photonq::parse_config_file(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return photonq::kExitConfigError;
  }

  // command-line overrides win over the config file
  if (!experiment.empty()) cfg.experiment = experiment;
  if (seed_set) cfg.seed = seed;
  if (!out_path.empty()) cfg.out_path = out_path;
  if (!format.empty()) cfg.format = format;
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "config error: --param expects key=value, got " << kv
                << '\n';
      return photonq::kExitConfigError;
    }
    cfg.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (cfg.experiment.empty()) {
    std::cerr << "config error: no experiment selected\n";
    return photonq::kExitConfigError;
  }
  return photonq::run_experiment(cfg, std::cerr);
}
