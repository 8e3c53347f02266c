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

#include "wdwvqe/ansatz.hpp"

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

std::string to_string(Entanglement e) { return e == Entanglement::Full ? "full" : "linear"; }

Entanglement parse_entanglement(const std::string& name) {
  if (name == "full") return Entanglement::Full;
  if (name == "linear") return Entanglement::Linear;
  throw InvalidArgument("unknown entanglement '" + name + "' (expected full or linear)");
}

AnsatzTemplate::AnsatzTemplate(const AnsatzSpec& spec) : spec_(spec) {
  const int n = spec.num_qubits;
  if (n < 1 || n > kMaxQubits) throw InvalidArgument("ansatz width must lie in [1, 12]");
  if (spec.depth < 0) throw InvalidArgument("ansatz depth must be >= 0");

  int next = 0;
  const auto rotation_layer = [&] {
    for (int q = 0; q < n; ++q) gates_.push_back({Gate::ry(q, 0.0), next++});
  };
  rotation_layer();
  for (int rep = 0; rep < spec.depth; ++rep) {
    if (spec.entanglement == Entanglement::Linear) {
      for (int q = 0; q + 1 < n; ++q) gates_.push_back({Gate::cnot(q, q + 1), -1});
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) gates_.push_back({Gate::cnot(i, j), -1});
    }
    rotation_layer();
  }
}

Circuit AnsatzTemplate::bind(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != parameter_count())
    throw InvalidArgument("ansatz expects " + std::to_string(parameter_count()) +
                          " parameters, got " + std::to_string(theta.size()));
  Circuit circuit(spec_.num_qubits);
  for (const auto& tg : gates_) {
    Gate g = tg.gate;
    if (tg.parameter >= 0) g.angle = theta[static_cast<std::size_t>(tg.parameter)];
    circuit.add(g);
  }
  return circuit;
}

}  // namespace wdwvqe
