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

#include "wdwvqe/qasm.hpp"

#include <cstdio>
#include <sstream>

namespace wdwvqe {

namespace {

std::string angle_text(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

std::string to_openqasm(const Circuit& circuit, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  for (const auto& line : header_comments) out << "// " << line << '\n';
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  for (const auto& g : circuit.gates()) {
    const auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
    switch (g.kind) {
      case GateKind::RY:
        out << "ry(" << angle_text(g.angle) << ") " << q(g.target) << ";\n";
        break;
      case GateKind::RX:
        out << "rx(" << angle_text(g.angle) << ") " << q(g.target) << ";\n";
        break;
      case GateKind::RZ:
        out << "rz(" << angle_text(g.angle) << ") " << q(g.target) << ";\n";
        break;
      case GateKind::H:
        out << "h " << q(g.target) << ";\n";
        break;
      case GateKind::X:
        out << "x " << q(g.target) << ";\n";
        break;
      case GateKind::Y:
        out << "y " << q(g.target) << ";\n";
        break;
      case GateKind::Z:
        out << "z " << q(g.target) << ";\n";
        break;
      case GateKind::CNOT:
        out << "cx " << q(*g.control) << "," << q(g.target) << ";\n";
        break;
    }
  }
  return out.str();
}

}  // namespace wdwvqe
