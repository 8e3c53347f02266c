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

#include "wdwvqe/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) out(k, j) = std::conj((*this)(j, k));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = j; k < dim_; ++k)
      err = std::max(err, std::abs((*this)(j, k) - std::conj((*this)(k, j))));
  return err;
}

double ComplexMatrix::unitarity_error() const {
  const ComplexMatrix product = (*this) * adjoint();
  return max_abs_diff(product, identity(dim_));
}

void ComplexMatrix::make_hermitian() {
  for (std::size_t j = 0; j < dim_; ++j) {
    (*this)(j, j) = (*this)(j, j).real();
    for (std::size_t k = j + 1; k < dim_; ++k) {
      const Complex avg = 0.5 * ((*this)(j, k) + std::conj((*this)(k, j)));
      (*this)(j, k) = avg;
      (*this)(k, j) = std::conj(avg);
    }
  }
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_real_diagonal() const {
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex z = (*this)(j, k);
      if (j == k ? z.imag() != 0.0 : z != Complex{}) return false;
    }
  return true;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw InvalidArgument("matrix dimension mismatch in *");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t m = lhs.dim();
  const std::size_t n = rhs.dim();
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Complex a = lhs(i, j);
      if (a == Complex{}) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = a * rhs(k, l);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix dimension mismatch in comparison");
  double err = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) err = std::max(err, std::abs(da[i] - db[i]));
  return err;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<Complex> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace wdwvqe
