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
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace wdwvqe {

using Objective = std::function<double(std::span<const double>)>;

/// Simultaneous perturbation stochastic approximation settings.
///
/// Gains follow a_k = a / (k + 1 + A)^alpha and c_k = c / (k + 1)^gamma for
/// k = 0, 1, ... When `stability` is unset, A = 0.01 * max_iterations.
struct SpsaConfig {
  int max_iterations = 1000;
  double a = 2.0 * std::numbers::pi / 10.0;
  double c = 0.1;
  double alpha = 0.602;
  double gamma = 0.101;
  std::optional<double> stability;
  std::uint64_t seed = 0;
  bool calibrate = true;
  /// Desired mean magnitude of the first parameter update when calibrating.
  double target_update = 2.0 * std::numbers::pi / 10.0;
  int calibration_probes = 25;
  /// Every `checkpoint_interval` iterations the exact objective is evaluated
  /// at the current iterate and the best one is remembered.
  int checkpoint_interval = 10;

  double stability_constant() const noexcept {
    return stability.value_or(0.01 * static_cast<double>(max_iterations));
  }
  double step_gain(int k) const noexcept;
  double perturbation_gain(int k) const noexcept;

  /// Throws InvalidArgument on non-positive gains, negative A, etc.
  void validate() const;
};

struct TracePoint {
  int iteration = 0;
  /// Mean of the two perturbed evaluations, (f+ + f-)/2.
  double estimate = 0.0;
};

struct ThetaSnapshot {
  int iteration = 0;
  double objective = 0.0;
  std::vector<double> theta;
};

struct OptimizationTrace {
  std::vector<TracePoint> points;
  std::vector<ThetaSnapshot> snapshots;
};

struct SpsaResult {
  std::vector<double> theta;
  double value = 0.0;
  /// Step gain actually used (after calibration, if any).
  double a = 0.0;
  bool calibrated = false;
  int evaluations = 0;
  OptimizationTrace trace;
};

/// (f(theta + c*delta) - f(theta - c*delta)) / (2 c delta_i) for each i.
/// `delta` entries must be +1 or -1.
std::vector<double> spsa_gradient_estimate(const Objective& objective,
                                           std::span<const double> theta, double c,
                                           std::span<const double> delta);

/// Chooses `a` so the first update moves each parameter by target_update on
/// average over `calibration_probes` random perturbations. Throws
/// ZeroGradientRegion if the mean |f+ - f-| is at rounding level (64 ulps of
/// the largest |f| seen), which includes every probe seeing f+ == f-.
double calibrate_step(const Objective& objective, std::span<const double> theta0,
                      const SpsaConfig& config);

/// Runs SPSA and returns the lower of {final iterate, best checkpoint}.
/// The returned `value` is always an exact objective evaluation at `theta`.
/// Throws NonFiniteObjective if the objective ever returns inf/nan.
SpsaResult minimize(const Objective& objective, std::span<const double> theta0,
                    const SpsaConfig& config);

}  // namespace wdwvqe
