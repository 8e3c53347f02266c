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

#include "wdwvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wdwvqe/errors.hpp"
#include "wdwvqe/grid.hpp"

namespace wdwvqe {

namespace {

constexpr double kImagTolerance = 1e-10;
constexpr int kMaxPauliQubits = 12;

}  // namespace

PauliString::PauliString(std::string labels) : labels_(std::move(labels)) {
  const int n = num_qubits();
  if (n < 1 || n > kMaxPauliQubits)
    throw InvalidArgument("Pauli string length must lie in [1, 12]");
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (labels_[q]) {
      case 'I':
        break;
      case 'X':
        flip_mask_ |= bit;
        break;
      case 'Y':
        flip_mask_ |= bit;
        y_mask_ |= bit;
        break;
      case 'Z':
        z_mask_ |= bit;
        break;
      default:
        throw InvalidArgument("invalid Pauli label '" + std::string(1, labels_[q]) + "'");
    }
  }
}

PauliString PauliString::identity(int num_qubits) {
  return PauliString(std::string(static_cast<std::size_t>(std::max(num_qubits, 0)), 'I'));
}

bool PauliString::is_identity() const noexcept { return flip_mask_ == 0 && z_mask_ == 0; }

Complex PauliString::phase(std::uint64_t basis_index) const noexcept {
  // Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>.
  const int ys = std::popcount(y_mask_);
  const int y_ones = std::popcount(y_mask_ & basis_index);
  const int z_ones = std::popcount(z_mask_ & basis_index);
  // i^ys * (-1)^(y_ones + z_ones)
  int power = ys % 4;
  if ((y_ones + z_ones) % 2 == 1) power = (power + 2) % 4;
  static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[power];
}

ComplexMatrix PauliString::matrix() const {
  const std::size_t dim = std::size_t{1} << num_qubits();
  ComplexMatrix m(dim);
  for (std::uint64_t k = 0; k < dim; ++k) m(k ^ flip_mask_, k) = phase(k);
  return m;
}

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxPauliQubits)
    throw InvalidArgument("PauliSum width must lie in [1, 12]");
}

void PauliSum::add(double coeff, const PauliString& string) {
  if (string.num_qubits() != num_qubits_)
    throw QubitMismatch("Pauli string width does not match the sum");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), string,
                             [](const PauliTerm& t, const PauliString& s) { return t.string < s; });
  if (it != terms_.end() && it->string == string) {
    it->coeff += coeff;
  } else {
    terms_.insert(it, PauliTerm{coeff, string});
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t.coeff, t.string);
  return *this;
}

void PauliSum::prune(double threshold) {
  std::erase_if(terms_, [threshold](const PauliTerm& t) { return std::abs(t.coeff) <= threshold; });
}

double PauliSum::coeff(std::string_view labels) const {
  for (const auto& t : terms_)
    if (t.string.labels() == labels) return t.coeff;
  return 0.0;
}

namespace {

// Neumaier summation, applied to real and imaginary parts separately. Large
// model potentials (1/epsilon ~ 1e4) otherwise lose the last digit.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Complex x) {
    add(re_, re_c_, x.real());
    add(im_, im_c_, x.imag());
    return *this;
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add(double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace

PauliSum decompose(const ComplexMatrix& op, double prune_threshold) {
  const std::size_t dim = op.dim();
  if (dim < 2 || !is_power_of_two(dim))
    throw InvalidArgument("decompose needs a 2^n x 2^n matrix with n >= 1");
  if (prune_threshold < 0.0) throw InvalidArgument("prune threshold must be >= 0");
  const int n = std::countr_zero(dim);
  PauliSum sum(n);

  static constexpr char kLabels[4] = {'I', 'X', 'Y', 'Z'};
  const std::size_t count = std::size_t{1} << (2 * n);
  std::string labels(static_cast<std::size_t>(n), 'I');
  for (std::size_t code = 0; code < count; ++code) {
    // Base-4 digits of `code`, most significant digit = slot 0, so the loop
    // visits strings in lexicographic I<X<Y<Z order.
    for (int q = 0; q < n; ++q) labels[q] = kLabels[(code >> (2 * (n - 1 - q))) & 3];
    const PauliString p(labels);
    // tr(P H) = sum_m phase(m) H(m, m ^ flip); the phases are +-1, +-i so
    // every product is exact and only the summation rounds.
    CompensatedSum tr;
    for (std::uint64_t m = 0; m < dim; ++m) tr += p.phase(m) * op(m, m ^ p.flip_mask());
    const Complex c = tr.value() / static_cast<double>(dim);
    if (std::abs(c.imag()) > kImagTolerance)
      throw NotHermitian("Pauli coefficient of " + labels + " has imaginary part " +
                         std::to_string(c.imag()));
    if (std::abs(c.real()) > prune_threshold) sum.add(c.real(), p);
  }
  return sum;
}

ComplexMatrix reconstruct(const PauliSum& sum) {
  const std::size_t dim = std::size_t{1} << sum.num_qubits();
  std::vector<CompensatedSum> acc(dim * dim);
  for (const auto& t : sum.terms()) {
    const auto flip = t.string.flip_mask();
    for (std::uint64_t k = 0; k < dim; ++k) acc[(k ^ flip) * dim + k] += t.coeff * t.string.phase(k);
  }
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = acc[r * dim + c].value();
  return m;
}

PauliSum tensor_extend(const PauliSum& sum, int slot, int total_dims) {
  if (total_dims < 1 || slot < 0 || slot >= total_dims)
    throw InvalidArgument("tensor_extend slot out of range");
  const auto width = static_cast<std::size_t>(sum.num_qubits());
  PauliSum out(sum.num_qubits() * total_dims);
  for (const auto& t : sum.terms()) {
    std::string labels(width * static_cast<std::size_t>(total_dims), 'I');
    labels.replace(width * static_cast<std::size_t>(slot), width, t.string.labels());
    out.add(t.coeff, PauliString(std::move(labels)));
  }
  return out;
}

}  // namespace wdwvqe
