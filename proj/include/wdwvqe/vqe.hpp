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
#include <optional>
#include <vector>

#include "wdwvqe/ansatz.hpp"
#include "wdwvqe/models.hpp"
#include "wdwvqe/pauli.hpp"
#include "wdwvqe/spsa.hpp"

namespace wdwvqe {

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<double> initial_theta;
  SpsaResult optimization;
  /// Calibration was requested but every probe saw a flat objective, so the
  /// configured step gain was used instead.
  bool calibration_skipped = false;
};

struct VqeResult {
  double energy_mean = 0.0;
  /// Sample standard deviation of the per-trial best energies (0 for one trial).
  double energy_std = 0.0;
  double best_energy = 0.0;
  std::vector<double> best_theta;
  int best_trial = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  AnsatzSpec ansatz;
  SpsaConfig optimizer;
  std::vector<TrialResult> per_trial;
  double exact_min = 0.0;
  double exact_nearest_zero = 0.0;
};

/// Seed of trial `index` under `master_seed` (splitmix64 of the pair).
std::uint64_t trial_seed(std::uint64_t master_seed, int index);

/// Minimizes <psi(theta)|H|psi(theta)> with SPSA over `trials` independent
/// random starts (uniform in [-pi, pi]). Trials may run on `threads`
/// workers; results are reduced in trial order, so the output does not
/// depend on the thread count.
VqeResult run_vqe(const PauliSum& hamiltonian, const AnsatzSpec& ansatz, const SpsaConfig& optimizer,
                  int trials, std::uint64_t seed, int threads = 1);

struct WdwReportOptions {
  int depth = 3;
  Entanglement entanglement = Entanglement::Full;
  SpsaConfig optimizer;
  int trials = 10;
  std::uint64_t seed = 0;
  int threads = 1;
  /// |nearest-zero eigenvalue| below this marks the model constraint-compatible.
  double constraint_threshold = 1e-3;
};

/// Exact spectrum and VQE side by side for one model.
struct WdwReport {
  ModelSpec spec;
  Conventions conventions;
  std::vector<double> spectrum;
  double exact_min = 0.0;
  double exact_nearest_zero = 0.0;
  bool constraint_compatible = false;
  double constraint_threshold = 0.0;
  /// Minimum of <psi|H|psi> over real-amplitude states: the lowest eigenvalue
  /// of Re(H). The Ry form only prepares real amplitudes, so VQE cannot go
  /// below this when H has imaginary entries.
  double real_amplitude_floor = 0.0;
  VqeResult vqe;
  bool variational_bound_holds = false;
  double hermiticity_error = 0.0;
  std::optional<PublishedResult> published;
  double wall_seconds = 0.0;
};

WdwReport wheeler_dewitt_report(const ModelSpec& spec, const WdwReportOptions& options);

}  // namespace wdwvqe
