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

#include "wdwvqe/models.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

namespace {

struct ModelName {
  ModelKind kind;
  const char* name;
};

constexpr ModelName kNames[] = {
    {ModelKind::Oscillator1D, "oscillator1d"},
    {ModelKind::Oscillator2D, "oscillator2d"},
    {ModelKind::BianchiIX, "bianchi-ix"},
    {ModelKind::HigherDerivative, "higher-derivative"},
    {ModelKind::StringDilaton, "string-dilaton"},
    {ModelKind::KaluzaKlein, "kaluza-klein"},
};

double require(const ModelSpec& spec, const char* key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw MissingParameter("model " + model_name(spec.kind) + " requires parameter '" + key + "'");
  if (!std::isfinite(it->second))
    throw MissingParameter("parameter '" + std::string(key) + "' must be finite");
  return it->second;
}

double optional_param(const ModelSpec& spec, const char* key, double fallback) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  if (!std::isfinite(it->second))
    throw MissingParameter("parameter '" + std::string(key) + "' must be finite");
  return it->second;
}

ComplexMatrix squared(const ComplexMatrix& m) {
  ComplexMatrix out = m * m;
  out.make_hermitian();
  return out;
}

// diag over the two-slot product grid of f(u_j, v_k); slot 0 is u.
ComplexMatrix function_of_positions(const Grid& grid,
                                    const std::function<double(double, double)>& f) {
  const std::size_t n = grid.num_points();
  std::vector<double> values(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double v = f(grid.point(j), grid.point(k));
      if (!std::isfinite(v)) throw NonFiniteValue("potential is not finite on the product grid");
      values[j * n + k] = v;
    }
  return ComplexMatrix::diagonal(values);
}

ComplexMatrix harmonic_oscillator(const Grid& grid) {
  const ComplexMatrix x = position_operator(grid);
  const ComplexMatrix p = momentum_operator(grid);
  return 0.5 * (squared(x) + squared(p));
}

}  // namespace

std::string model_name(ModelKind kind) {
  for (const auto& entry : kNames)
    if (entry.kind == kind) return entry.name;
  return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
  for (const auto& entry : kNames)
    if (name == entry.name) return entry.kind;
  std::string valid;
  for (const auto& entry : kNames) valid += std::string(valid.empty() ? "" : ", ") + entry.name;
  throw InvalidArgument("unknown model '" + name + "'; valid models: " + valid);
}

const std::vector<ModelKind>& all_model_kinds() {
  static const std::vector<ModelKind> kinds = [] {
    std::vector<ModelKind> out;
    for (const auto& entry : kNames) out.push_back(entry.kind);
    return out;
  }();
  return kinds;
}

bool is_cosmological(ModelKind kind) {
  return kind != ModelKind::Oscillator1D && kind != ModelKind::Oscillator2D;
}

Grid default_model_grid(int qubits_per_dim) {
  return Grid::with_default_spacing(qubits_per_dim, 0.0, kModelMomentumRoll);
}

ModelInstance build_model(const ModelSpec& spec, double prune_threshold) {
  const Grid& grid = spec.grid;
  if (grid.num_qubits() != spec.qubits_per_dim)
    throw InvalidArgument("grid has " + std::to_string(grid.num_qubits()) +
                          " qubits but qubits_per_dim is " + std::to_string(spec.qubits_per_dim));
  if (spec.qubits_per_dim < 1 || spec.qubits_per_dim > 4)
    throw InvalidArgument("qubits_per_dim must lie in [1, 4]");

  Conventions conv;
  conv.num_points = grid.num_points();
  conv.qubits_per_dim = spec.qubits_per_dim;
  conv.spacing = grid.spacing();
  conv.offset = grid.offset();
  conv.momentum_roll = grid.momentum_roll();
  conv.prune_threshold = prune_threshold;
  conv.num_dims = spec.kind == ModelKind::Oscillator1D ? 1 : 2;
  conv.epsilon = optional_param(spec, param::kEpsilon, kDefaultEpsilon);
  conv.lapse = optional_param(spec, param::kLapse, kDefaultLapse);

  const auto slot0 = [](const ComplexMatrix& m) { return embed(m, 0, 2); };
  const auto slot1 = [](const ComplexMatrix& m) { return embed(m, 1, 2); };
  const ComplexMatrix x = position_operator(grid);
  const ComplexMatrix p = momentum_operator(grid);
  const ComplexMatrix p2 = squared(p);

  ComplexMatrix h;
  switch (spec.kind) {
    case ModelKind::Oscillator1D:
      h = harmonic_oscillator(grid);
      break;
    case ModelKind::Oscillator2D: {
      const ComplexMatrix h1 = harmonic_oscillator(grid);
      h = slot0(h1) + slot1(h1);
      break;
    }
    case ModelKind::BianchiIX: {
      // slot 0: scale factor a, slot 1: anisotropy beta
      const double lambda = require(spec, param::kLambda);
      const double gamma = require(spec, param::kGamma);
      const double eps = conv.epsilon;
      const ComplexMatrix inv_a2 =
          function_of_position(grid, [eps](double a) { return 1.0 / (a * a + eps); });
      const ComplexMatrix potential = function_of_position(
          grid, [&](double a) { return lambda * a * a * a * a - a * a + gamma; });
      h = (-1.0) * slot0(p2);
      h += kron(inv_a2, p2);
      h += slot0(potential);
      h += function_of_positions(grid, [](double a, double b) { return 8.0 * a * a * b * b; });
      break;
    }
    case ModelKind::HigherDerivative: {
      // slot 0: x = Q - a, slot 1: y = Q + a
      const double beta = require(spec, param::kBetaTilde);
      if (beta == 0.0) throw InvalidArgument("beta_tilde must be nonzero");
      h = (-0.25) * slot0(p2);
      h += 0.25 * slot1(p2);
      h += function_of_positions(grid, [beta](double xv, double yv) {
        return -(yv * yv - xv * xv) / 4.0 + xv * xv / (8.0 * beta) * (xv - yv) * (xv - yv);
      });
      break;
    }
    case ModelKind::StringDilaton: {
      // slot 0: z = ln a, slot 1: shifted dilaton Phi
      const double lambda = require(spec, param::kLambda);
      h = (-1.0 / 12.0) * slot0(p2);
      h += (1.0 / 16.0) * slot1(p2);
      h += slot1(function_of_position(grid, [lambda](double phi) {
        return 2.0 * lambda * std::exp(-4.0 * phi);
      }));
      break;
    }
    case ModelKind::KaluzaKlein: {
      // slot 0: q1, slot 1: q2
      const double k = require(spec, param::kCurvature);
      const double prefactor = conv.lapse / (24.0 * std::numbers::pi * std::numbers::pi);
      h = k * (slot0(x) - slot1(x));
      h += slot0(p2);
      h -= slot1(p2);
      h *= prefactor;
      break;
    }
  }

  const double scale = std::max(1.0, h.max_abs());
  if (h.hermiticity_error() > 1e-12 * scale)
    throw NotHermitian("assembled Hamiltonian is not Hermitian");
  h.make_hermitian();

  PauliSum pauli = decompose(h, prune_threshold);
  return ModelInstance{spec, std::move(h), std::move(pauli), conv};
}

ModelSpec paper_instance(ModelKind kind) {
  ModelSpec spec;
  spec.kind = kind;
  switch (kind) {
    case ModelKind::BianchiIX:
      spec.params = {{param::kLambda, 2.480000000000011}, {param::kGamma, 0.99}};
      break;
    case ModelKind::HigherDerivative:
      spec.params = {{param::kBetaTilde, 0.042808219}};
      break;
    case ModelKind::StringDilaton:
      spec.params = {{param::kLambda, 0.581}};
      break;
    case ModelKind::KaluzaKlein:
      spec.params = {{param::kCurvature, 1e-6}, {param::kLapse, 1.0}};
      break;
    case ModelKind::Oscillator1D:
    case ModelKind::Oscillator2D:
      throw InvalidArgument("published parameters exist only for the cosmological models");
  }
  return spec;
}

std::optional<PublishedResult> published_result(ModelKind kind) {
  switch (kind) {
    case ModelKind::BianchiIX:
      return PublishedResult{0.4829572576220993, 0.12032107873580308, 2.0707928270104423e-5};
    case ModelKind::HigherDerivative:
      return PublishedResult{-0.07876069717108591, 1.3971389629283328, -1.6494040350599992};
    case ModelKind::StringDilaton:
      return PublishedResult{0.10669043206316431, 0.02731991298884283, 6.159038648121874e-5};
    case ModelKind::KaluzaKlein:
      return PublishedResult{-0.03330932911207404, 0.19977149262935648, -1.5714280000014587};
    default:
      return std::nullopt;
  }
}

}  // namespace wdwvqe
