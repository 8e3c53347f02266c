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

#include "wdwvqe/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Grid::Grid(std::size_t num_points, double spacing, double offset, int momentum_roll)
    : num_points_(num_points),
      num_qubits_(0),
      spacing_(spacing),
      offset_(offset),
      momentum_roll_(momentum_roll) {
  if (num_points < 2 || !is_power_of_two(num_points))
    throw InvalidArgument("grid point count must be a power of two >= 2, got " +
                          std::to_string(num_points));
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw InvalidArgument("grid spacing must be positive and finite");
  if (!std::isfinite(offset)) throw InvalidArgument("grid offset must be finite");
  while ((std::size_t{1} << num_qubits_) < num_points) ++num_qubits_;
}

Grid Grid::with_default_spacing(int num_qubits, double offset, int momentum_roll) {
  if (num_qubits < 1 || num_qubits > 12)
    throw InvalidArgument("qubits per dimension must lie in [1, 12]");
  const std::size_t n = std::size_t{1} << num_qubits;
  const double spacing = std::sqrt(2.0 * std::numbers::pi) / static_cast<double>(n);
  return Grid(n, spacing, offset, momentum_roll);
}

double Grid::point(std::size_t j) const noexcept {
  return (static_cast<double>(j) - static_cast<double>(num_points_) / 2.0 + offset_) * spacing_;
}

ComplexMatrix position_operator(const Grid& grid) {
  std::vector<double> pts(grid.num_points());
  for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = grid.point(j);
  return ComplexMatrix::diagonal(pts);
}

ComplexMatrix dft_matrix(std::size_t num_points) {
  if (!is_power_of_two(num_points))
    throw InvalidArgument("DFT size must be a power of two, got " + std::to_string(num_points));
  ComplexMatrix f(num_points);
  const double norm = 1.0 / std::sqrt(static_cast<double>(num_points));
  for (std::size_t j = 0; j < num_points; ++j)
    for (std::size_t k = 0; k < num_points; ++k) {
      // Reduce jk mod N first so the phase argument stays small.
      const auto m = static_cast<double>((j * k) % num_points);
      const double phase = 2.0 * std::numbers::pi * m / static_cast<double>(num_points);
      f(j, k) = std::polar(norm, phase);
    }
  return f;
}

ComplexMatrix momentum_operator(const Grid& grid) {
  const std::size_t n = grid.num_points();
  const auto shift = static_cast<std::size_t>(
      ((grid.momentum_roll() % static_cast<long>(n)) + static_cast<long>(n)) %
      static_cast<long>(n));
  std::vector<double> rolled(n);
  for (std::size_t j = 0; j < n; ++j) rolled[(j + shift) % n] = grid.point(j);

  const ComplexMatrix f = dft_matrix(n);
  ComplexMatrix p = f.adjoint() * ComplexMatrix::diagonal(rolled) * f;
  p.make_hermitian();
  return p;
}

ComplexMatrix function_of_position(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> values(grid.num_points());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double a = grid.point(j);
    values[j] = f(a);
    if (!std::isfinite(values[j]))
      throw NonFiniteValue("function is not finite at grid point " + std::to_string(a));
  }
  return ComplexMatrix::diagonal(values);
}

ComplexMatrix embed(const ComplexMatrix& op, int dim_index, int num_dims) {
  if (num_dims < 1 || dim_index < 0 || dim_index >= num_dims)
    throw InvalidArgument("embed slot out of range");
  const ComplexMatrix eye = ComplexMatrix::identity(op.dim());
  ComplexMatrix out = dim_index == 0 ? op : eye;
  for (int slot = 1; slot < num_dims; ++slot) out = kron(out, slot == dim_index ? op : eye);
  return out;
}

}  // namespace wdwvqe
