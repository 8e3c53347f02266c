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
#include <string>
#include <string_view>
#include <vector>

#include "wdwvqe/matrix.hpp"

namespace wdwvqe {

/// Tensor product of single-qubit Paulis, written left to right: label 0 is
/// tensor slot 0, the most significant bit of the basis index.
class PauliString {
 public:
  /// Throws InvalidArgument for empty strings or labels outside {I,X,Y,Z}.
  explicit PauliString(std::string labels);

  static PauliString identity(int num_qubits);

  const std::string& labels() const noexcept { return labels_; }
  int num_qubits() const noexcept { return static_cast<int>(labels_.size()); }
  bool is_identity() const noexcept;

  /// Bits flipped by X/Y factors.
  std::uint64_t flip_mask() const noexcept { return flip_mask_; }
  /// Phase picked up by basis state |k>: P|k> = phase(k) |k ^ flip_mask>.
  Complex phase(std::uint64_t basis_index) const noexcept;

  ComplexMatrix matrix() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::string labels_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t y_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

inline constexpr double kDefaultPruneThreshold = 1e-10;

/// Real-weighted sum of Pauli strings on a fixed register width. Terms are
/// kept sorted by label (I < X < Y < Z) with no duplicates.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits);

  /// Adds c * P, merging with an existing term on the same string.
  void add(double coeff, const PauliString& string);
  void add(double coeff, std::string_view labels) { add(coeff, PauliString(std::string(labels))); }
  PauliSum& operator+=(const PauliSum& other);

  /// Drops terms with |c| <= threshold.
  void prune(double threshold);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the given string, zero if absent.
  double coeff(std::string_view labels) const;

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// c_P = tr(P H) / 2^n for every string, keeping |c_P| > prune_threshold.
/// Throws NotHermitian if any c_P has an imaginary part above 1e-10 and
/// InvalidArgument if the dimension is not a power of two.
PauliSum decompose(const ComplexMatrix& op, double prune_threshold = kDefaultPruneThreshold);

/// Sum of c * matrix(P).
ComplexMatrix reconstruct(const PauliSum& sum);

/// Pads every string with identities so the sum acts on tensor slot `slot`
/// of `total_dims` equal-width slots.
PauliSum tensor_extend(const PauliSum& sum, int slot, int total_dims);

}  // namespace wdwvqe
