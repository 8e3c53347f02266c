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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wdwvqe/eigensolver.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/pauli.hpp"

namespace wdwvqe {
namespace {

double residual(const ComplexMatrix& h, const EigResult& r, std::size_t i) {
  double s = 0.0;
  for (std::size_t row = 0; row < h.dim(); ++row) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < h.dim(); ++k) acc += h(row, k) * r.eigenvectors(k, i);
    s += std::norm(acc - r.eigenvalues[i] * r.eigenvectors(row, i));
  }
  return std::sqrt(s);
}

double spectral_norm_bound(const ComplexMatrix& h) { return h.frobenius_norm(); }

TEST(Eigh, Examples) {
  const auto d = eigh(ComplexMatrix::diagonal(std::vector<double>{3, -1, 2, 0}));
  EXPECT_EQ(d.eigenvalues, (std::vector<double>{-1, 0, 2, 3}));

  const auto y = eigh(PauliString("Y").matrix());
  EXPECT_NEAR(y.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(y.eigenvalues[1], 1.0, 1e-15);
  const Complex overlap = std::conj(y.eigenvectors(0, 0)) * y.eigenvectors(0, 1) +
                          std::conj(y.eigenvectors(1, 0)) * y.eigenvectors(1, 1);
  EXPECT_LT(std::abs(overlap), 1e-15);
}

TEST(Eigh, ReadingsOfTheSpectrum) {
  const auto m = ComplexMatrix::diagonal(std::vector<double>{-2, 0.001, 5, 9});
  EXPECT_DOUBLE_EQ(min_eigenvalue(m), -2.0);
  EXPECT_DOUBLE_EQ(nearest_zero_eigenvalue(m), 0.001);
  const auto pd = ComplexMatrix::diagonal(std::vector<double>{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(min_eigenvalue(pd), 1.0);
  EXPECT_DOUBLE_EQ(nearest_zero_eigenvalue(pd), 1.0);
  EXPECT_DOUBLE_EQ(nearest_zero({-0.5, 0.5, 2.0}), -0.5);
  EXPECT_THROW(nearest_zero({}), InvalidArgument);
}

TEST(Eigh, RejectsNonHermitian) {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigh(m), NotHermitian);
  ComplexMatrix c(2);
  c(0, 0) = Complex(1.0, 0.5);
  EXPECT_THROW(eigh(c), NotHermitian);
  EXPECT_THROW(eigh(ComplexMatrix()), InvalidArgument);
}

TEST(Eigh, ClosedForm2x2) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    const double a = g(rng), d = g(rng);
    const Complex b(g(rng), g(rng));
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(1, 1) = d;
    m(0, 1) = b;
    m(1, 0) = std::conj(b);
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const auto ev = eigh(m).eigenvalues;
    EXPECT_NEAR(ev[0], mid - rad, 1e-12);
    EXPECT_NEAR(ev[1], mid + rad, 1e-12);
  }
}

TEST(Eigh, RandomSuite) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(2, 16);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = dim(rng);
    const ComplexMatrix h = testing::random_hermitian(n, rng, 1.0 + (i % 5));
    const EigResult r = eigh(h);
    const double norm = spectral_norm_bound(h);
    ASSERT_EQ(r.eigenvalues.size(), n);
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(r.eigenvalues[k - 1], r.eigenvalues[k]);
    for (std::size_t k = 0; k < n; ++k) EXPECT_LT(residual(h, r, k), 1e-10 * norm);
    EXPECT_LT(r.eigenvectors.unitarity_error(), 1e-10);

    double s1 = 0.0, s2 = 0.0;
    for (double l : r.eigenvalues) {
      s1 += l;
      s2 += l * l;
    }
    EXPECT_NEAR(s1, h.trace().real(), 1e-8);
    EXPECT_NEAR(s2, (h * h).trace().real(), 1e-8);

    const auto ref = testing::jacobi_eigenvalues(h);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(r.eigenvalues[k], ref[k], 1e-9 * norm);
  }
}

TEST(Eigh, UnitaryConjugationInvariance) {
  std::mt19937_64 rng(4);
  for (std::size_t n : {2u, 5u, 8u, 16u}) {
    const ComplexMatrix h = testing::random_hermitian(n, rng);
    const ComplexMatrix u = testing::random_unitary(n, rng);
    ComplexMatrix conj = u.adjoint() * h * u;
    conj.make_hermitian();
    const auto a = eigh(h).eigenvalues;
    const auto b = eigh(conj).eigenvalues;
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
  }
}

TEST(Eigh, DegenerateClusterIsDeterministic) {
  const EigResult id = eigh(ComplexMatrix::identity(4));
  EXPECT_EQ(max_abs_diff(id.eigenvectors, ComplexMatrix::identity(4)), 0.0);

  // Z x Z has two doubly degenerate eigenvalues.
  const EigResult zz = eigh(PauliString("ZZ").matrix());
  EXPECT_EQ(zz.eigenvalues, (std::vector<double>{-1, -1, 1, 1}));
  const std::size_t expected_index[] = {1, 2, 0, 3};
  for (std::size_t c = 0; c < 4; ++c) EXPECT_NEAR(zz.eigenvectors(expected_index[c], c).real(), 1.0, 1e-15);

  std::mt19937_64 rng(12);
  const ComplexMatrix u = testing::random_unitary(6, rng);
  ComplexMatrix h = u * ComplexMatrix::diagonal(std::vector<double>{1, 1, 1, 2, 3, 3}) * u.adjoint();
  h.make_hermitian();
  const EigResult r = eigh(h);
  EXPECT_LT(r.eigenvectors.unitarity_error(), 1e-10);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_LT(residual(h, r, k), 1e-10 * h.frobenius_norm());
}

TEST(Eigh, PhaseNormalization) {
  std::mt19937_64 rng(6);
  const EigResult r = eigh(testing::random_hermitian(8, rng));
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t arg = 0;
    for (std::size_t k = 1; k < 8; ++k)
      if (std::abs(r.eigenvectors(k, c)) > std::abs(r.eigenvectors(arg, c)) + 1e-14) arg = k;
    EXPECT_GT(r.eigenvectors(arg, c).real(), 0.0);
    EXPECT_NEAR(r.eigenvectors(arg, c).imag(), 0.0, 1e-15);
  }
}

}  // namespace
}  // namespace wdwvqe
