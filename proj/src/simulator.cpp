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

#include "wdwvqe/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

namespace {

constexpr double kRealTolerance = 1e-10;

std::uint64_t qubit_bit(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

void check_qubit(int num_qubits, int q) {
  if (q < 0 || q >= num_qubits)
    throw InvalidArgument("qubit index " + std::to_string(q) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
}

// Applies [[m00, m01], [m10, m11]] to `target`.
void apply_single(std::span<Complex> amps, std::uint64_t bit, Complex m00, Complex m01,
                  Complex m10, Complex m11) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | bit];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | bit] = m10 * a0 + m11 * a1;
  }
}

}  // namespace

Statevector Statevector::zero_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw InvalidArgument("statevector width must lie in [1, 12]");
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[0] = 1.0;
  return Statevector(num_qubits, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0 || dim > (std::size_t{1} << kMaxQubits))
    throw InvalidArgument("amplitude count must be 2^n with 1 <= n <= 12");
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    throw InvalidArgument("amplitudes must have finite nonzero norm");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= scale;
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm() const noexcept {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw InvalidArgument("circuit width must lie in [1, 12]");
}

Circuit& Circuit::add(const Gate& gate) {
  check_qubit(num_qubits_, gate.target);
  if (gate.kind == GateKind::CNOT) {
    if (!gate.control) throw InvalidArgument("CNOT requires a control qubit");
    check_qubit(num_qubits_, *gate.control);
    if (*gate.control == gate.target) throw InvalidArgument("CNOT control equals target");
  } else if (gate.control) {
    throw InvalidArgument("only CNOT takes a control qubit");
  }
  if (!std::isfinite(gate.angle)) throw InvalidArgument("gate angle must be finite");
  gates_.push_back(gate);
  return *this;
}

void apply(Statevector& state, const Gate& gate) {
  const int n = state.num_qubits();
  check_qubit(n, gate.target);
  auto amps = state.amplitudes();
  const std::uint64_t bit = qubit_bit(n, gate.target);
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  const Complex i{0.0, 1.0};
  switch (gate.kind) {
    case GateKind::RY:
      apply_single(amps, bit, c, -s, s, c);
      break;
    case GateKind::RX:
      apply_single(amps, bit, c, -i * s, -i * s, c);
      break;
    case GateKind::RZ:
      apply_single(amps, bit, std::polar(1.0, -gate.angle / 2.0), 0.0, 0.0,
                   std::polar(1.0, gate.angle / 2.0));
      break;
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      apply_single(amps, bit, r, r, r, -r);
      break;
    }
    case GateKind::X:
      apply_single(amps, bit, 0.0, 1.0, 1.0, 0.0);
      break;
    case GateKind::Y:
      apply_single(amps, bit, 0.0, -i, i, 0.0);
      break;
    case GateKind::Z:
      apply_single(amps, bit, 1.0, 0.0, 0.0, -1.0);
      break;
    case GateKind::CNOT: {
      if (!gate.control) throw InvalidArgument("CNOT requires a control qubit");
      check_qubit(n, *gate.control);
      if (*gate.control == gate.target) throw InvalidArgument("CNOT control equals target");
      const std::uint64_t cbit = qubit_bit(n, *gate.control);
      for (std::uint64_t k = 0; k < amps.size(); ++k)
        if ((k & cbit) && !(k & bit)) std::swap(amps[k], amps[k | bit]);
      break;
    }
  }
}

Statevector run(const Circuit& circuit) {
  Statevector state = Statevector::zero_state(circuit.num_qubits());
  for (const auto& g : circuit.gates()) apply(state, g);
  return state;
}

double expectation(const Statevector& state, const PauliSum& observable) {
  if (observable.num_qubits() != state.num_qubits())
    throw QubitMismatch("observable acts on " + std::to_string(observable.num_qubits()) +
                        " qubits, state has " + std::to_string(state.num_qubits()));
  const auto amps = state.amplitudes();
  Complex total = 0.0;
  for (const auto& term : observable.terms()) {
    const auto flip = term.string.flip_mask();
    Complex t = 0.0;
    for (std::uint64_t m = 0; m < amps.size(); ++m)
      t += std::conj(amps[m ^ flip]) * term.string.phase(m) * amps[m];
    total += term.coeff * t;
  }
  if (std::abs(total.imag()) > kRealTolerance)
    throw NumericalError("expectation has imaginary residue " + std::to_string(total.imag()));
  return total.real();
}

std::map<std::uint64_t, std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots < 1) throw InvalidArgument("shots must be >= 1");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    // First cdf entry strictly above u; never lands on a zero-probability outcome.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++counts[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return counts;
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw QubitMismatch("fidelity of states with different widths");
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

}  // namespace wdwvqe
