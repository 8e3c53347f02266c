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

#include <span>
#include <string>
#include <vector>

#include "wdwvqe/simulator.hpp"

namespace wdwvqe {

enum class Entanglement { Full, Linear };

std::string to_string(Entanglement e);
/// Accepts "full" or "linear"; throws InvalidArgument otherwise.
Entanglement parse_entanglement(const std::string& name);

struct AnsatzSpec {
  int num_qubits = 1;
  int depth = 3;
  Entanglement entanglement = Entanglement::Full;

  int parameter_count() const noexcept { return num_qubits * (depth + 1); }
};

/// One slot of the template: either a fixed gate or an RY whose angle is
/// taken from the parameter vector.
struct TemplateGate {
  Gate gate;
  int parameter = -1;  // index into theta, -1 when fixed
};

/// Ry variational form: an RY on every qubit, followed by `depth`
/// repetitions of [CNOT entangler block, RY on every qubit].
class AnsatzTemplate {
 public:
  explicit AnsatzTemplate(const AnsatzSpec& spec);

  const AnsatzSpec& spec() const noexcept { return spec_; }
  int parameter_count() const noexcept { return spec_.parameter_count(); }
  const std::vector<TemplateGate>& gates() const noexcept { return gates_; }

  /// Positional binding in gate order. Throws InvalidArgument on length mismatch.
  Circuit bind(std::span<const double> theta) const;

 private:
  AnsatzSpec spec_;
  std::vector<TemplateGate> gates_;
};

inline AnsatzTemplate build_ansatz(const AnsatzSpec& spec) { return AnsatzTemplate(spec); }

}  // namespace wdwvqe
