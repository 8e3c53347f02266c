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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wdwvqe/matrix.hpp"
#include "wdwvqe/pauli.hpp"

namespace wdwvqe {

inline constexpr int kMaxQubits = 12;

/// Amplitudes of an n-qubit register. Basis index bits are big-endian in
/// qubit labels: qubit 0 is the most significant bit.
class Statevector {
 public:
  /// |0...0>. Throws InvalidArgument outside 1 <= num_qubits <= 12.
  static Statevector zero_state(int num_qubits);
  /// Takes ownership of `amplitudes` (size must be 2^n); normalizes it.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

  double norm() const noexcept;

 private:
  Statevector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

enum class GateKind { RY, RX, RZ, H, X, Y, Z, CNOT };

struct Gate {
  GateKind kind;
  int target = 0;
  std::optional<int> control;
  double angle = 0.0;

  static Gate ry(int q, double theta) { return {GateKind::RY, q, std::nullopt, theta}; }
  static Gate rx(int q, double theta) { return {GateKind::RX, q, std::nullopt, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, q, std::nullopt, theta}; }
  static Gate h(int q) { return {GateKind::H, q, std::nullopt, 0.0}; }
  static Gate x(int q) { return {GateKind::X, q, std::nullopt, 0.0}; }
  static Gate y(int q) { return {GateKind::Y, q, std::nullopt, 0.0}; }
  static Gate z(int q) { return {GateKind::Z, q, std::nullopt, 0.0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits);

  /// Appends a gate after checking its qubit indices.
  Circuit& add(const Gate& gate);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Applies `gate` in place. RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
void apply(Statevector& state, const Gate& gate);

/// Gates applied in list order to the zero state.
Statevector run(const Circuit& circuit);

/// <psi| sum |psi>, exact. Throws QubitMismatch on width disagreement.
double expectation(const Statevector& state, const PauliSum& observable);

/// Multinomial draw of `shots` computational-basis outcomes. Deterministic
/// per seed on every platform (mt19937_64 with an explicit 53-bit uniform).
std::map<std::uint64_t, std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                              std::uint64_t seed);

double fidelity(const Statevector& a, const Statevector& b);

}  // namespace wdwvqe
