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

#include <cstddef>
#include <functional>

#include "wdwvqe/matrix.hpp"

namespace wdwvqe {

/// Uniform 1-D discretization with 2^n points.
///
/// Point j sits at (j - N/2 + offset) * spacing, so the default grid for
/// N = 4 and unit spacing is {-2, -1, 0, 1}.
///
/// `momentum_roll` selects how Fourier modes are paired with momentum
/// eigenvalues: the momentum operator is F^-1 * roll(x, momentum_roll) * F,
/// where roll cyclically shifts the position diagonal. Zero is the plain
/// conjugation; the model builders use 1 (see models.hpp).
class Grid {
 public:
  /// Throws InvalidArgument unless num_points is a power of two >= 2 and
  /// spacing is positive and finite.
  Grid(std::size_t num_points, double spacing, double offset = 0.0, int momentum_roll = 0);

  /// Grid over 2^num_qubits points with spacing sqrt(2*pi)/N.
  static Grid with_default_spacing(int num_qubits, double offset = 0.0, int momentum_roll = 0);

  std::size_t num_points() const noexcept { return num_points_; }
  int num_qubits() const noexcept { return num_qubits_; }
  double spacing() const noexcept { return spacing_; }
  double offset() const noexcept { return offset_; }
  int momentum_roll() const noexcept { return momentum_roll_; }

  double point(std::size_t j) const noexcept;

 private:
  std::size_t num_points_;
  int num_qubits_;
  double spacing_;
  double offset_;
  int momentum_roll_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// diag(point(0), ..., point(N-1)).
ComplexMatrix position_operator(const Grid& grid);

/// [F]_{jk} = exp(i 2 pi j k / N) / sqrt(N). Rejects N that is not a power of two.
ComplexMatrix dft_matrix(std::size_t num_points);

/// F^-1 x F (with the grid's momentum roll applied to x). Hermitian to
/// rounding and then symmetrized exactly; same spectrum as the position
/// operator.
ComplexMatrix momentum_operator(const Grid& grid);

/// diag(f(point(j))). Throws NonFiniteValue if f is not finite on some point.
ComplexMatrix function_of_position(const Grid& grid, const std::function<double(double)>& f);

/// I x ... x op x ... x I with `op` in tensor slot `dim_index` (slot 0 is the
/// leftmost factor, i.e. the most significant qubits).
ComplexMatrix embed(const ComplexMatrix& op, int dim_index, int num_dims);

}  // namespace wdwvqe
