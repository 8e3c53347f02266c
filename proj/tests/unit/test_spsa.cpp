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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "wdwvqe/errors.hpp"
#include "wdwvqe/spsa.hpp"

namespace wdwvqe {
namespace {

double sum_sq(std::span<const double> t) {
  double s = 0.0;
  for (double v : t) s += v * v;
  return s;
}

TEST(Spsa, GainsDecreaseStrictly) {
  SpsaConfig cfg;
  for (int k = 0; k < 2000; ++k) {
    EXPECT_GT(cfg.step_gain(k), cfg.step_gain(k + 1));
    EXPECT_GT(cfg.perturbation_gain(k), cfg.perturbation_gain(k + 1));
    EXPECT_GT(cfg.step_gain(k + 1), 0.0);
  }
  EXPECT_DOUBLE_EQ(cfg.stability_constant(), 10.0);
  EXPECT_DOUBLE_EQ(cfg.perturbation_gain(0), cfg.c);
}

TEST(Spsa, ValidateRejectsBadConfig) {
  auto bad = [](auto mutate) {
    SpsaConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), InvalidArgument);
  };
  bad([](SpsaConfig& c) { c.max_iterations = 0; });
  bad([](SpsaConfig& c) { c.a = 0.0; });
  bad([](SpsaConfig& c) { c.c = -1.0; });
  bad([](SpsaConfig& c) { c.alpha = 0.0; });
  bad([](SpsaConfig& c) { c.stability = -1.0; });
  bad([](SpsaConfig& c) { c.target_update = 0.0; });
  bad([](SpsaConfig& c) { c.a = std::numeric_limits<double>::infinity(); });
}

TEST(Spsa, EstimatorUnbiasedOnQuadratic) {
  // f = 3 x^2 + x y + 2 y^2 - x, grad = (6x + y - 1, x + 4y)
  const Objective f = [](std::span<const double> t) {
    return 3 * t[0] * t[0] + t[0] * t[1] + 2 * t[1] * t[1] - t[0];
  };
  const std::vector<double> theta = {0.7, -0.3};
  const double c = 1e-3;
  std::vector<double> mean(2, 0.0);
  for (const auto& delta : {std::vector<double>{1, 1}, std::vector<double>{1, -1}}) {
    const auto g = spsa_gradient_estimate(f, theta, c, delta);
    for (int i = 0; i < 2; ++i) mean[i] += 0.5 * g[i];
  }
  EXPECT_NEAR(mean[0], 6 * 0.7 - 0.3 - 1, 1e-4);
  EXPECT_NEAR(mean[1], 0.7 + 4 * -0.3, 1e-4);
  EXPECT_THROW(spsa_gradient_estimate(f, theta, c, std::vector<double>{1}), InvalidArgument);
}

TEST(Spsa, ConvergesOnConvexBowl) {
  SpsaConfig cfg;
  cfg.max_iterations = 300;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cfg.seed = seed;
    const auto r = minimize(sum_sq, std::vector<double>{1.0, 1.0}, cfg);
    EXPECT_LT(std::sqrt(sum_sq(r.theta)), 0.1);
    EXPECT_DOUBLE_EQ(r.value, sum_sq(r.theta));
    EXPECT_LE(r.trace.points.size(), 300u);
    EXPECT_TRUE(r.calibrated);
  }
}

TEST(Spsa, ConstantObjective) {
  const Objective flat = [](std::span<const double>) { return 2.5; };
  SpsaConfig cfg;
  EXPECT_THROW(calibrate_step(flat, std::vector<double>{0.3, -0.2}, cfg), ZeroGradientRegion);
  EXPECT_THROW(minimize(flat, std::vector<double>{0.3, -0.2}, cfg), ZeroGradientRegion);

  cfg.calibrate = false;
  cfg.max_iterations = 50;
  const auto g = spsa_gradient_estimate(flat, std::vector<double>{0.3, -0.2}, 0.1, std::vector<double>{1, -1});
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[1], 0.0);
  const auto r = minimize(flat, std::vector<double>{0.3, -0.2}, cfg);
  EXPECT_EQ(r.theta, (std::vector<double>{0.3, -0.2}));
  for (const auto& s : r.trace.snapshots) EXPECT_EQ(s.theta, r.theta);
}

TEST(Spsa, CalibrationShrinksStepOnSteepObjective) {
  const Objective steep = [](std::span<const double> t) { return 1e6 * sum_sq(t); };
  SpsaConfig cfg;
  const double a = calibrate_step(steep, std::vector<double>{0.5, -0.4, 0.2}, cfg);
  EXPECT_GT(a, 0.0);
  EXPECT_LT(a, cfg.a);
}

TEST(Spsa, NonFiniteObjective) {
  const Objective bad = [](std::span<const double> t) {
    return t[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : t[0];
  };
  SpsaConfig cfg;
  cfg.calibrate = false;
  EXPECT_THROW(minimize(bad, std::vector<double>{1.0}, cfg), NonFiniteObjective);
  EXPECT_THROW(minimize(sum_sq, std::vector<double>{std::nan("")}, cfg), InvalidArgument);
}

TEST(Spsa, DeterministicPerSeed) {
  SpsaConfig cfg;
  cfg.max_iterations = 100;
  cfg.seed = 77;
  const auto a = minimize(sum_sq, std::vector<double>{1.0, -2.0, 0.5}, cfg);
  const auto b = minimize(sum_sq, std::vector<double>{1.0, -2.0, 0.5}, cfg);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.value, b.value);
  cfg.seed = 78;
  EXPECT_NE(minimize(sum_sq, std::vector<double>{1.0, -2.0, 0.5}, cfg).theta, a.theta);
}

TEST(Spsa, ReturnsBestCheckpoint) {
  SpsaConfig cfg;
  cfg.max_iterations = 200;
  const auto r = minimize(sum_sq, std::vector<double>{2.0, 2.0}, cfg);
  for (const auto& s : r.trace.snapshots) EXPECT_LE(r.value, s.objective);
  EXPECT_EQ(r.trace.snapshots.back().iteration, 200);
  EXPECT_EQ(r.evaluations, 2 * cfg.calibration_probes + 1 + 2 * 200 + 20);
}

}  // namespace
}  // namespace wdwvqe
