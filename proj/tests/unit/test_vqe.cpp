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

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/vqe.hpp"

namespace wdwvqe {
namespace {

SpsaConfig quick(int iterations) {
  SpsaConfig c;
  c.max_iterations = iterations;
  return c;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> trial_bests(const VqeResult& r) {
  std::vector<double> out;
  for (const auto& t : r.per_trial) out.push_back(t.optimization.value);
  return out;
}

TEST(Vqe, SingleQubitZ) {
  PauliSum z(1);
  z.add(1.0, "Z");
  const VqeResult r = run_vqe(z, {1, 3, Entanglement::Full}, quick(300), 5, 1);
  EXPECT_NEAR(r.best_energy, -1.0, 1e-3);
  EXPECT_DOUBLE_EQ(r.exact_min, -1.0);
  EXPECT_EQ(r.trials, 5);
  EXPECT_EQ(r.per_trial.size(), 5u);
}

TEST(Vqe, ConstantObjective) {
  PauliSum id(2);
  id.add(1.0, "II");
  const VqeResult r = run_vqe(id, {2, 2, Entanglement::Full}, quick(50), 4, 3);
  EXPECT_NEAR(r.best_energy, 1.0, 1e-15);
  EXPECT_NEAR(r.energy_mean, 1.0, 1e-15);
  EXPECT_NEAR(r.energy_std, 0.0, 1e-15);
  for (const auto& t : r.per_trial) {
    EXPECT_TRUE(t.calibration_skipped);
    for (std::size_t i = 0; i < t.initial_theta.size(); ++i)
      EXPECT_NEAR(t.optimization.theta[i], t.initial_theta[i], 1e-12);
  }
}

TEST(Vqe, Validation) {
  PauliSum z(1);
  z.add(1.0, "Z");
  EXPECT_THROW(run_vqe(z, {2, 1, Entanglement::Full}, quick(10), 1, 0), QubitMismatch);
  EXPECT_THROW(run_vqe(z, {1, 1, Entanglement::Full}, quick(10), 0, 0), InvalidArgument);
  EXPECT_THROW(run_vqe(z, {1, 1, Entanglement::Full}, quick(0), 1, 0), InvalidArgument);
}

TEST(Vqe, TrialSeedsDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 20; ++m)
    for (int i = 0; i < 50; ++i) seen.insert(trial_seed(m, i));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Vqe, VariationalBoundOnRandomHamiltonians) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) {
    const PauliSum h = decompose(testing::random_hermitian(16, rng));
    const VqeResult r = run_vqe(h, {4, 2, Entanglement::Linear}, quick(150), 2, i);
    EXPECT_GE(r.best_energy, r.exact_min - 1e-9);
    for (const auto& t : r.per_trial) EXPECT_GE(t.optimization.value, r.exact_min - 1e-9);
  }
}

TEST(Vqe, DeterministicAndThreadIndependent) {
  const PauliSum h = build_model(paper_instance(ModelKind::StringDilaton)).pauli;
  const AnsatzSpec a{4, 2, Entanglement::Full};
  const VqeResult one = run_vqe(h, a, quick(120), 6, 7, 1);
  const VqeResult again = run_vqe(h, a, quick(120), 6, 7, 1);
  const VqeResult par = run_vqe(h, a, quick(120), 6, 7, 4);
  for (const VqeResult* r : {&again, &par}) {
    EXPECT_EQ(r->best_energy, one.best_energy);
    EXPECT_EQ(r->energy_mean, one.energy_mean);
    EXPECT_EQ(r->energy_std, one.energy_std);
    EXPECT_EQ(r->best_theta, one.best_theta);
    for (std::size_t i = 0; i < one.per_trial.size(); ++i) {
      EXPECT_EQ(r->per_trial[i].seed, one.per_trial[i].seed);
      EXPECT_EQ(r->per_trial[i].optimization.theta, one.per_trial[i].optimization.theta);
    }
  }
  EXPECT_NE(run_vqe(h, a, quick(120), 6, 8, 1).best_theta, one.best_theta);
}

TEST(Vqe, StatisticsAreSampleMoments) {
  const PauliSum h = build_model(ModelSpec{}).pauli;
  const VqeResult r = run_vqe(h, {2, 1, Entanglement::Full}, quick(50), 5, 2);
  const auto v = trial_bests(r);
  double mean = 0.0;
  for (double e : v) mean += e / 5;
  double ss = 0.0;
  for (double e : v) ss += (e - mean) * (e - mean);
  EXPECT_NEAR(r.energy_mean, mean, 1e-15);
  EXPECT_NEAR(r.energy_std, std::sqrt(ss / 4), 1e-15);
  EXPECT_EQ(r.best_energy, *std::min_element(v.begin(), v.end()));
  EXPECT_EQ(r.best_theta, r.per_trial[static_cast<std::size_t>(r.best_trial)].optimization.theta);
}

TEST(Vqe, DeeperAnsatzDoesNotHurtOnOscillator) {
  // Real Hamiltonian (unrolled momentum), where the Ry form can reach the
  // ground state.
  ModelSpec spec;
  spec.grid = Grid(4, spec.grid.spacing(), 0.0, 0);
  const PauliSum h = build_model(spec).pauli;
  const double shallow = median(trial_bests(run_vqe(h, {2, 0, Entanglement::Full}, quick(500), 10, 0)));
  const double deep = median(trial_bests(run_vqe(h, {2, 3, Entanglement::Full}, quick(500), 10, 0)));
  EXPECT_LE(deep, shallow + 1e-9);
}

TEST(Vqe, WheelerDeWittReport) {
  WdwReportOptions opts;
  opts.trials = 3;
  opts.optimizer = quick(100);
  const WdwReport r = wheeler_dewitt_report(paper_instance(ModelKind::KaluzaKlein), opts);
  EXPECT_TRUE(r.variational_bound_holds);
  EXPECT_EQ(r.spectrum.size(), 16u);
  EXPECT_EQ(r.exact_min, r.spectrum.front());
  EXPECT_NEAR(r.exact_min, r.vqe.exact_min, 1e-14);
  EXPECT_TRUE(r.constraint_compatible);  // nearest-zero eigenvalue is ~1e-20
  ASSERT_TRUE(r.published.has_value());
  EXPECT_EQ(r.published->exact_eigenvalue, -1.5714280000014587);
  EXPECT_EQ(r.hermiticity_error, 0.0);
  EXPECT_GE(r.real_amplitude_floor, r.exact_min - 1e-12);
  EXPECT_GE(r.vqe.best_energy, r.real_amplitude_floor - 1e-9);
}

TEST(Vqe, RealAmplitudeFloorBoundsRyAnsatz) {
  // The rolled-momentum oscillator is complex; every Ry trial stays above
  // the lowest eigenvalue of Re(H), which is well above the true minimum.
  WdwReportOptions opts;
  opts.trials = 4;
  opts.optimizer = quick(300);
  const WdwReport r = wheeler_dewitt_report(ModelSpec{}, opts);
  EXPECT_NEAR(r.real_amplitude_floor, 0.2824384447410425, 1e-12);  // numpy eigvalsh(H.real)
  for (const auto& t : r.vqe.per_trial) EXPECT_GE(t.optimization.value, r.real_amplitude_floor - 1e-9);
  EXPECT_GT(r.real_amplitude_floor, r.exact_min + 0.1);
}

}  // namespace
}  // namespace wdwvqe
