// Copyright 2026 The wdwvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <vector>

#include "wdwvqe/serialize.hpp"

namespace wdwvqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "WDWVQE_OUT_DIR";

/// Fully resolved settings for one invocation. Built from defaults, then a
/// JSON config file (flat keys mirroring the flags), then command-line flags.
struct RunConfig {
  std::string command;
  std::string model = "oscillator1d";
  bool paper_params = false;
  std::map<std::string, double> params;
  int qubits_per_dim = 2;
  std::optional<double> spacing;  // default sqrt(2 pi)/N
  double offset = 0.0;
  int momentum_roll = kModelMomentumRoll;
  double prune = kDefaultPruneThreshold;

  int depth = 3;
  std::string entanglement = "full";
  int iterations = 1000;
  double a = SpsaConfig{}.a;
  double c = SpsaConfig{}.c;
  double alpha = SpsaConfig{}.alpha;
  double gamma = SpsaConfig{}.gamma;
  std::optional<double> stability;
  bool calibrate = true;
  double target_update = SpsaConfig{}.target_update;
  int trials = 10;
  std::uint64_t seed = 0;
  int threads = 1;
  double threshold = 1e-3;
  std::string hamiltonian_file;

  std::string sweep_param;
  std::string sweep_range;

  std::string out_dir = ".";
};

/// Resolved config as JSON. The output directory is omitted so that the same
/// run written to two places produces identical files.
Json to_json(const RunConfig& config);

/// Applies flat JSON keys (dashes or underscores) onto `config`.
/// Throws InvalidArgument on unknown keys or wrong value types.
void apply_config_json(const Json& doc, RunConfig& config);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdwvqe::cli
