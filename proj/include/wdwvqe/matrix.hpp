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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wdwvqe {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Every operator in the library
/// (position, momentum, Hamiltonians, DFT) is one of these; dimensions are
/// tiny (at most 2^12) so no attempt is made at blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest |A(j,k) - conj(A(k,j))|.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }
  /// Largest entry of |A A^dagger - I|.
  double unitarity_error() const;

  /// Replaces the matrix by (A + A^dagger)/2.
  void make_hermitian();

  double frobenius_norm() const;
  double max_abs() const;

  /// True when every off-diagonal entry is exactly zero and the diagonal is real.
  bool is_real_diagonal() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Largest entrywise |a - b|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v);

}  // namespace wdwvqe
