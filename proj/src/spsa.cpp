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

#include "wdwvqe/spsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

namespace {

// Calibration draws from its own stream so that turning calibration on or
// off does not change the perturbations seen by the main loop.
constexpr std::uint64_t kCalibrationStream = 0x9e3779b97f4a7c15ULL;

// Probe differences at or below this many ulps of the objective's magnitude
// are rounding noise, not slope.
constexpr double kFlatUlps = 64.0;

double checked(double v) {
  if (!std::isfinite(v)) throw NonFiniteObjective("objective returned a non-finite value");
  return v;
}

void draw_rademacher(std::mt19937_64& rng, std::vector<double>& delta) {
  for (auto& d : delta) d = (rng() >> 63) ? 1.0 : -1.0;
}

std::vector<double> shifted(std::span<const double> theta, std::span<const double> delta,
                            double scale) {
  std::vector<double> out(theta.begin(), theta.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * delta[i];
  return out;
}

}  // namespace

double SpsaConfig::step_gain(int k) const noexcept {
  return a / std::pow(static_cast<double>(k) + 1.0 + stability_constant(), alpha);
}

double SpsaConfig::perturbation_gain(int k) const noexcept {
  return c / std::pow(static_cast<double>(k) + 1.0, gamma);
}

void SpsaConfig::validate() const {
  if (max_iterations < 1) throw InvalidArgument("SPSA needs max_iterations >= 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("SPSA step gain a must be > 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("SPSA perturbation gain c must be > 0");
  if (!(alpha > 0.0) || !(gamma > 0.0))
    throw InvalidArgument("SPSA exponents alpha and gamma must be > 0");
  if (!(stability_constant() >= 0.0)) throw InvalidArgument("SPSA stability constant must be >= 0");
  if (calibration_probes < 1) throw InvalidArgument("SPSA needs at least one calibration probe");
  if (!(target_update > 0.0)) throw InvalidArgument("SPSA target update must be > 0");
  if (checkpoint_interval < 1) throw InvalidArgument("SPSA checkpoint interval must be >= 1");
}

std::vector<double> spsa_gradient_estimate(const Objective& objective,
                                           std::span<const double> theta, double c,
                                           std::span<const double> delta) {
  if (delta.size() != theta.size())
    throw InvalidArgument("perturbation and parameter vectors differ in length");
  const double plus = checked(objective(shifted(theta, delta, c)));
  const double minus = checked(objective(shifted(theta, delta, -c)));
  std::vector<double> g(theta.size());
  // 1/delta_i == delta_i for Rademacher entries.
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (plus - minus) / (2.0 * c) * delta[i];
  return g;
}

double calibrate_step(const Objective& objective, std::span<const double> theta0,
                      const SpsaConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed ^ kCalibrationStream);
  std::vector<double> delta(theta0.size());
  double mean_diff = 0.0;
  double magnitude = 0.0;
  for (int probe = 0; probe < config.calibration_probes; ++probe) {
    draw_rademacher(rng, delta);
    const double plus = checked(objective(shifted(theta0, delta, config.c)));
    const double minus = checked(objective(shifted(theta0, delta, -config.c)));
    mean_diff += std::abs(plus - minus) / config.calibration_probes;
    magnitude = std::max({magnitude, std::abs(plus), std::abs(minus)});
  }
  if (mean_diff <= kFlatUlps * std::numeric_limits<double>::epsilon() * magnitude)
    throw ZeroGradientRegion("all calibration probes measured zero objective change");
  // First step moves each parameter by a_0 * mean_diff / (2 c) with
  // a_0 = a / (1 + A)^alpha; solve for a.
  return config.target_update * 2.0 * config.c *
         std::pow(1.0 + config.stability_constant(), config.alpha) / mean_diff;
}

SpsaResult minimize(const Objective& objective, std::span<const double> theta0,
                    const SpsaConfig& config) {
  config.validate();
  for (double t : theta0)
    if (!std::isfinite(t)) throw InvalidArgument("initial parameters must be finite");

  SpsaResult result;
  SpsaConfig cfg = config;
  if (cfg.calibrate) {
    cfg.a = calibrate_step(objective, theta0, cfg);
    result.calibrated = true;
    result.evaluations += 2 * cfg.calibration_probes;
  }
  result.a = cfg.a;

  std::vector<double> theta(theta0.begin(), theta0.end());
  std::vector<double> best_theta = theta;
  double best_value = checked(objective(theta));
  ++result.evaluations;
  result.trace.snapshots.push_back({0, best_value, theta});

  std::mt19937_64 rng(cfg.seed);
  std::vector<double> delta(theta.size());
  result.trace.points.reserve(static_cast<std::size_t>(cfg.max_iterations));

  for (int k = 0; k < cfg.max_iterations; ++k) {
    draw_rademacher(rng, delta);
    const double ck = cfg.perturbation_gain(k);
    const double plus = checked(objective(shifted(theta, delta, ck)));
    const double minus = checked(objective(shifted(theta, delta, -ck)));
    result.evaluations += 2;
    result.trace.points.push_back({k, 0.5 * (plus + minus)});

    const double step = cfg.step_gain(k) * (plus - minus) / (2.0 * ck);
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= step * delta[i];

    const bool last = k + 1 == cfg.max_iterations;
    if ((k + 1) % cfg.checkpoint_interval == 0 || last) {
      const double value = checked(objective(theta));
      ++result.evaluations;
      result.trace.snapshots.push_back({k + 1, value, theta});
      if (value < best_value || (last && value == best_value)) {
        best_value = value;
        best_theta = theta;
      }
    }
  }

  result.theta = std::move(best_theta);
  result.value = best_value;
  return result;
}

}  // namespace wdwvqe
