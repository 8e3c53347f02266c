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

#include "wdwvqe/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

Json to_json(const PauliSum& sum) {
  Json arr = Json::array();
  for (const auto& t : sum.terms()) arr.push_back({{"coeff", t.coeff}, {"paulis", t.string.labels()}});
  return arr;
}

PauliSum pauli_sum_from_json(const Json& doc) {
  const Json* terms = &doc;
  if (doc.is_object()) {
    if (!doc.contains("terms")) throw InvalidArgument("Pauli JSON object lacks a \"terms\" array");
    terms = &doc.at("terms");
  }
  if (!terms->is_array() || terms->empty())
    throw InvalidArgument("Pauli JSON must be a non-empty array of {coeff, paulis}");
  try {
    const auto width = static_cast<int>(terms->front().at("paulis").get<std::string>().size());
    PauliSum sum(width);
    for (const auto& t : *terms) {
      const double c = t.at("coeff").get<double>();
      sum.add(c, PauliString(t.at("paulis").get<std::string>()));
    }
    return sum;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed Pauli JSON: ") + e.what());
  }
}

Json to_json(const Conventions& conv) {
  return {
      {"num_points", conv.num_points},
      {"qubits_per_dim", conv.qubits_per_dim},
      {"num_dims", conv.num_dims},
      {"spacing", conv.spacing},
      {"offset", conv.offset},
      {"momentum_roll", conv.momentum_roll},
      {"epsilon", conv.epsilon},
      {"lapse", conv.lapse},
      {"prune_threshold", conv.prune_threshold},
      {"qubit_order", conv.qubit_order},
      {"momentum", conv.momentum},
  };
}

Json to_json(const ModelSpec& spec) {
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  return {{"kind", model_name(spec.kind)},
          {"qubits_per_dim", spec.qubits_per_dim},
          {"params", params}};
}

Json to_json(const AnsatzSpec& spec) {
  return {{"form", "ry"},
          {"num_qubits", spec.num_qubits},
          {"depth", spec.depth},
          {"entanglement", to_string(spec.entanglement)},
          {"parameter_count", spec.parameter_count()}};
}

Json to_json(const SpsaConfig& c) {
  return {{"max_iterations", c.max_iterations},
          {"a", c.a},
          {"c", c.c},
          {"alpha", c.alpha},
          {"gamma", c.gamma},
          {"stability", c.stability_constant()},
          {"calibrate", c.calibrate},
          {"target_update", c.target_update},
          {"calibration_probes", c.calibration_probes},
          {"checkpoint_interval", c.checkpoint_interval}};
}

Json spectrum_json(const std::vector<double>& ascending) {
  return {{"eigenvalues", ascending},
          {"min", ascending.front()},
          {"nearest_zero", nearest_zero(ascending)}};
}

Json to_json(const VqeResult& r) {
  Json trials = Json::array();
  for (const auto& t : r.per_trial) {
    trials.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"best_energy", t.optimization.value},
                      {"step_gain_a", t.optimization.a},
                      {"calibrated", t.optimization.calibrated},
                      {"calibration_skipped", t.calibration_skipped},
                      {"evaluations", t.optimization.evaluations},
                      {"initial_theta", t.initial_theta},
                      {"theta", t.optimization.theta}});
  }
  return {{"energy_mean", r.energy_mean},
          {"energy_std", r.energy_std},
          {"uncertainty_definition", "sample standard deviation of per-trial best energies"},
          {"best_energy", r.best_energy},
          {"best_trial", r.best_trial},
          {"best_theta", r.best_theta},
          {"trials", r.trials},
          {"master_seed", r.seed},
          {"exact_min", r.exact_min},
          {"exact_nearest_zero", r.exact_nearest_zero},
          {"ansatz", to_json(r.ansatz)},
          {"optimizer", to_json(r.optimizer)},
          {"per_trial", trials}};
}

Json to_json(const WdwReport& report) {
  Json doc = {{"model", to_json(report.spec)},
              {"conventions", to_json(report.conventions)},
              {"hermiticity_error", report.hermiticity_error},
              {"spectrum", spectrum_json(report.spectrum)},
              {"exact_min", report.exact_min},
              {"exact_nearest_zero", report.exact_nearest_zero},
              {"constraint_threshold", report.constraint_threshold},
              {"constraint_compatible", report.constraint_compatible},
              {"real_amplitude_floor", report.real_amplitude_floor},
              {"variational_bound_holds", report.variational_bound_holds},
              {"vqe", to_json(report.vqe)}};
  if (report.published) {
    doc["published"] = {{"vqe_energy", report.published->vqe_energy},
                        {"vqe_uncertainty", report.published->vqe_uncertainty},
                        {"exact_eigenvalue", report.published->exact_eigenvalue}};
  }
  return doc;
}

std::string trace_csv(const VqeResult& result) {
  std::ostringstream out;
  out << "trial,iteration,energy\n";
  char buf[64];
  for (const auto& t : result.per_trial)
    for (const auto& p : t.optimization.trace.points) {
      std::snprintf(buf, sizeof buf, "%.17g", p.estimate);
      out << t.index << ',' << p.iteration << ',' << buf << '\n';
    }
  return out.str();
}

std::string pauli_table(const PauliSum& sum) {
  std::ostringstream out;
  char buf[128];
  for (const auto& t : sum.terms()) {
    std::string factors;
    for (char c : t.string.labels()) {
      if (!factors.empty()) factors += " x ";
      factors += c;
    }
    std::snprintf(buf, sizeof buf, "%+.9f  ( %s )\n", t.coeff, factors.c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace wdwvqe
