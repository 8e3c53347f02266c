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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdwvqe/grid.hpp"
#include "wdwvqe/matrix.hpp"
#include "wdwvqe/pauli.hpp"

namespace wdwvqe {

enum class ModelKind {
  Oscillator1D,
  Oscillator2D,
  BianchiIX,
  HigherDerivative,
  StringDilaton,
  KaluzaKlein,
};

/// CLI-style names: oscillator1d, oscillator2d, bianchi-ix, higher-derivative,
/// string-dilaton, kaluza-klein.
std::string model_name(ModelKind kind);
/// Throws InvalidArgument listing the valid names.
ModelKind parse_model_kind(const std::string& name);
const std::vector<ModelKind>& all_model_kinds();
bool is_cosmological(ModelKind kind);

/// Parameter keys used in ModelSpec::params.
namespace param {
inline constexpr const char* kLambda = "lambda";          // cosmological constant
inline constexpr const char* kGamma = "gamma";            // radiation constant
inline constexpr const char* kBetaTilde = "beta_tilde";   // higher-derivative coupling
inline constexpr const char* kCurvature = "k";            // Kaluza-Klein curvature constant
inline constexpr const char* kLapse = "lapse";            // lapse N, default 1
inline constexpr const char* kEpsilon = "epsilon";        // 1/(a^2 + eps) regularizer, default 1e-4
}  // namespace param

inline constexpr double kDefaultEpsilon = 1e-4;
inline constexpr double kDefaultLapse = 1.0;
/// Fourier-mode roll used by the model builders; with it the 1-D oscillator
/// decomposes onto {II, IY, IZ, XI, XY, ZI, ZZ}.
inline constexpr int kModelMomentumRoll = 1;

/// N = 2^qubits_per_dim, spacing sqrt(2 pi)/N, offset 0, model momentum roll.
Grid default_model_grid(int qubits_per_dim);

struct ModelSpec {
  ModelKind kind = ModelKind::Oscillator1D;
  int qubits_per_dim = 2;
  Grid grid = default_model_grid(2);
  std::map<std::string, double> params;
};

/// Everything needed to reproduce a built Hamiltonian.
struct Conventions {
  std::size_t num_points = 0;
  int qubits_per_dim = 0;
  int num_dims = 0;
  double spacing = 0.0;
  double offset = 0.0;
  int momentum_roll = 0;
  double epsilon = kDefaultEpsilon;
  double lapse = kDefaultLapse;
  double prune_threshold = kDefaultPruneThreshold;
  std::string qubit_order = "big-endian (qubit 0 = most significant bit = leftmost label)";
  std::string momentum = "F^-1 roll(x, momentum_roll) F with F_jk = exp(2 pi i jk/N)/sqrt(N)";
};

struct ModelInstance {
  ModelSpec spec;
  ComplexMatrix matrix;
  PauliSum pauli;
  Conventions conventions;
};

/// Assembles the Hamiltonian from grid operators and decomposes it.
/// Throws MissingParameter when a required parameter is absent or not
/// finite, NonFiniteValue when a potential is singular on the grid.
ModelInstance build_model(const ModelSpec& spec, double prune_threshold = kDefaultPruneThreshold);

/// Spec preloaded with the published parameter values and default grid.
ModelSpec paper_instance(ModelKind kind);

/// Values published alongside each cosmological model.
struct PublishedResult {
  double vqe_energy;
  double vqe_uncertainty;
  double exact_eigenvalue;
};
std::optional<PublishedResult> published_result(ModelKind kind);

}  // namespace wdwvqe
