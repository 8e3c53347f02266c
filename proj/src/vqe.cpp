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

#include "wdwvqe/vqe.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "wdwvqe/eigensolver.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/simulator.hpp"

namespace wdwvqe {

namespace {

constexpr double kVariationalSlack = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialResult run_trial(const PauliSum& hamiltonian, const AnsatzTemplate& ansatz,
                      const SpsaConfig& base, int index, std::uint64_t seed) {
  TrialResult trial;
  trial.index = index;
  trial.seed = seed;

  std::mt19937_64 rng(splitmix64(seed ^ 0x5bd1e995ULL));
  trial.initial_theta.resize(static_cast<std::size_t>(ansatz.parameter_count()));
  for (auto& t : trial.initial_theta) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    t = -std::numbers::pi + 2.0 * std::numbers::pi * u;
  }

  const Objective objective = [&](std::span<const double> theta) {
    return expectation(run(ansatz.bind(theta)), hamiltonian);
  };

  SpsaConfig cfg = base;
  cfg.seed = seed;
  try {
    trial.optimization = minimize(objective, trial.initial_theta, cfg);
  } catch (const ZeroGradientRegion&) {
    cfg.calibrate = false;
    trial.calibration_skipped = true;
    trial.optimization = minimize(objective, trial.initial_theta, cfg);
  }
  return trial;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, int index) {
  return splitmix64(splitmix64(master_seed) + static_cast<std::uint64_t>(index));
}

VqeResult run_vqe(const PauliSum& hamiltonian, const AnsatzSpec& ansatz, const SpsaConfig& optimizer,
                  int trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw InvalidArgument("VQE needs at least one trial");
  if (ansatz.num_qubits != hamiltonian.num_qubits())
    throw QubitMismatch("ansatz has " + std::to_string(ansatz.num_qubits) +
                        " qubits, Hamiltonian has " + std::to_string(hamiltonian.num_qubits()));
  optimizer.validate();
  const AnsatzTemplate templ(ansatz);

  VqeResult result;
  result.trials = trials;
  result.seed = seed;
  result.ansatz = ansatz;
  result.optimizer = optimizer;
  result.per_trial.resize(static_cast<std::size_t>(trials));

  const int workers = std::clamp(threads, 1, trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      try {
        result.per_trial[static_cast<std::size_t>(i)] =
            run_trial(hamiltonian, templ, optimizer, i, trial_seed(seed, i));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  result.best_energy = result.per_trial.front().optimization.value;
  for (const auto& t : result.per_trial) {
    const double e = t.optimization.value;
    sum += e;
    if (e < result.best_energy) {
      result.best_energy = e;
      result.best_trial = t.index;
    }
  }
  result.best_theta = result.per_trial[static_cast<std::size_t>(result.best_trial)].optimization.theta;
  result.energy_mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (const auto& t : result.per_trial) {
      const double d = t.optimization.value - result.energy_mean;
      ss += d * d;
    }
    result.energy_std = std::sqrt(ss / (trials - 1));
  }

  const EigResult spectrum = eigh(reconstruct(hamiltonian));
  result.exact_min = spectrum.eigenvalues.front();
  result.exact_nearest_zero = nearest_zero(spectrum.eigenvalues);
  return result;
}

WdwReport wheeler_dewitt_report(const ModelSpec& spec, const WdwReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ModelInstance model = build_model(spec);

  WdwReport report;
  report.spec = spec;
  report.conventions = model.conventions;
  report.hermiticity_error = model.matrix.hermiticity_error();
  report.spectrum = eigh(model.matrix).eigenvalues;
  report.exact_min = report.spectrum.front();
  report.exact_nearest_zero = nearest_zero(report.spectrum);
  report.constraint_threshold = options.constraint_threshold;
  report.constraint_compatible = std::abs(report.exact_nearest_zero) < options.constraint_threshold;
  ComplexMatrix real_part(model.matrix.dim());
  for (std::size_t r = 0; r < real_part.dim(); ++r)
    for (std::size_t c = 0; c < real_part.dim(); ++c) real_part(r, c) = model.matrix(r, c).real();
  report.real_amplitude_floor = eigh(real_part).eigenvalues.front();

  AnsatzSpec ansatz;
  ansatz.num_qubits = model.pauli.num_qubits();
  ansatz.depth = options.depth;
  ansatz.entanglement = options.entanglement;
  report.vqe = run_vqe(model.pauli, ansatz, options.optimizer, options.trials, options.seed,
                       options.threads);
  report.variational_bound_holds = report.vqe.best_energy >= report.exact_min - kVariationalSlack;
  report.published = published_result(spec.kind);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wdwvqe
