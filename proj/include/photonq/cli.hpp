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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace photonq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
  std::string out_path;  // empty: stdout
  std::string format = "csv";
};

/// key=value lines, '#' comments; recognized keys experiment/seed/out/format,
/// everything else becomes a parameter.
ExperimentConfig parse_config_file(const std::string& path);

/// Runs one experiment, writing its table to the configured sink. Returns a
/// process exit code; diagnostics go to `err`.
int run_experiment(const ExperimentConfig& config, std::ostream& err);

}  // namespace photonq
