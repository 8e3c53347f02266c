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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wdwvqe/eigensolver.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/grid.hpp"

namespace wdwvqe {
namespace {

using testing::fourier_conjugate;

void expect_diag(const ComplexMatrix& m, std::vector<double> expected, double tol = 1e-15) {
  ASSERT_EQ(m.dim(), expected.size());
  EXPECT_TRUE(m.is_real_diagonal());
  for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_NEAR(m(j, j).real(), expected[j], tol);
}

TEST(Grid, RejectsBadConstruction) {
  EXPECT_THROW(Grid(3, 1.0), InvalidArgument);
  EXPECT_THROW(Grid(1, 1.0), InvalidArgument);
  EXPECT_THROW(Grid(0, 1.0), InvalidArgument);
  EXPECT_THROW(Grid(4, 0.0), InvalidArgument);
  EXPECT_THROW(Grid(4, -1.0), InvalidArgument);
  EXPECT_THROW(Grid(4, std::nan("")), InvalidArgument);
  EXPECT_THROW(Grid::with_default_spacing(0), InvalidArgument);
  EXPECT_THROW(Grid::with_default_spacing(13), InvalidArgument);
}

TEST(Grid, DefaultSpacing) {
  const Grid g = Grid::with_default_spacing(2);
  EXPECT_EQ(g.num_points(), 4u);
  EXPECT_EQ(g.num_qubits(), 2);
  EXPECT_DOUBLE_EQ(g.spacing() * g.spacing(), 2.0 * std::numbers::pi / 16.0);
}

TEST(Grid, PointsStrictlyIncreasing) {
  for (int q = 1; q <= 6; ++q) {
    const Grid g(std::size_t{1} << q, 0.3, 0.25);
    for (std::size_t j = 1; j < g.num_points(); ++j) EXPECT_LT(g.point(j - 1), g.point(j));
  }
}

TEST(PositionOperator, Examples) {
  expect_diag(position_operator(Grid(4, 1.0)), {-2, -1, 0, 1});
  expect_diag(position_operator(Grid(2, 1.0)), {-1, 0});
  expect_diag(position_operator(Grid(4, 0.5, 0.5)), {-0.75, -0.25, 0.25, 0.75});
}

TEST(DftMatrix, Examples) {
  const ComplexMatrix f2 = dft_matrix(2);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(f2(0, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f2(0, 1) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f2(1, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f2(1, 1) + r), 0.0, 1e-15);

  const ComplexMatrix f4 = dft_matrix(4);
  EXPECT_NEAR(std::abs(f4(1, 1) - Complex(0.0, 0.5)), 0.0, 1e-15);
  EXPECT_LT(f4.unitarity_error(), 1e-14);
  for (std::size_t n : {8u, 16u, 64u}) EXPECT_LT(dft_matrix(n).unitarity_error(), 1e-13);
}

TEST(DftMatrix, RejectsNonPowerOfTwo) {
  EXPECT_THROW(dft_matrix(3), InvalidArgument);
  EXPECT_THROW(dft_matrix(6), InvalidArgument);
  EXPECT_THROW(dft_matrix(0), InvalidArgument);
}

TEST(MomentumOperator, TwoPointClosedForm) {
  const ComplexMatrix p = momentum_operator(Grid(2, 1.0));
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(std::abs(p(j, k) - Complex(-0.5)), 0.0, 1e-15);
}

TEST(MomentumOperator, MatchesExplicitFourierSum) {
  for (int roll : {0, 1, 2, -1}) {
    const Grid g(8, 0.7, 0.0, roll);
    std::vector<double> d(8);
    const int shift = ((roll % 8) + 8) % 8;
    for (std::size_t j = 0; j < 8; ++j) d[(j + shift) % 8] = g.point(j);
    EXPECT_LT(max_abs_diff(momentum_operator(g), fourier_conjugate(d)), 1e-13) << "roll " << roll;
  }
}

TEST(MomentumOperator, HermitianWithPositionSpectrum) {
  for (int q = 1; q <= 5; ++q)
    for (int roll : {0, 1})
      for (double offset : {0.0, 0.5}) {
        const Grid g(std::size_t{1} << q, 0.4 + 0.1 * q, offset, roll);
        const ComplexMatrix p = momentum_operator(g);
        EXPECT_LT(p.hermiticity_error(), 1e-12);
        const auto ev = eigh(p).eigenvalues;
        for (std::size_t j = 0; j < ev.size(); ++j) EXPECT_NEAR(ev[j], g.point(j), 1e-10);
      }
}

TEST(MomentumOperator, TraceOfSquare) {
  for (double d : {1.0, 0.5, std::sqrt(2.0 * std::numbers::pi) / 4.0}) {
    const ComplexMatrix p = momentum_operator(Grid(4, d));
    const ComplexMatrix x = position_operator(Grid(4, d));
    EXPECT_NEAR((p * p).trace().real(), 6.0 * d * d, 1e-12);
    EXPECT_NEAR((x * x).trace().real(), 6.0 * d * d, 1e-12);
  }
}

TEST(FunctionOfPosition, Examples) {
  const Grid g(4, 1.0);
  expect_diag(function_of_position(g, [](double a) { return a * a; }), {4, 1, 0, 1});
  EXPECT_THROW(function_of_position(g, [](double a) { return 1.0 / (a * a); }), NonFiniteValue);
  expect_diag(function_of_position(g, [](double a) { return 1.0 / (a * a + 0.01); }),
              {1.0 / 4.01, 1.0 / 1.01, 100.0, 1.0 / 1.01}, 1e-12);
  EXPECT_THROW(function_of_position(g, [](double) { return std::nan(""); }), NonFiniteValue);
  // Half-integer offset removes the zero point.
  EXPECT_NO_THROW(function_of_position(Grid(4, 1.0, 0.5), [](double a) { return 1.0 / (a * a); }));
}

TEST(Embed, Examples) {
  const ComplexMatrix z = ComplexMatrix::diagonal(std::vector<double>{1, -1});
  expect_diag(embed(z, 1, 2), {1, -1, 1, -1});
  expect_diag(embed(z, 0, 2), {1, 1, -1, -1});
  for (int slot = 0; slot < 2; ++slot)
    EXPECT_EQ(max_abs_diff(embed(ComplexMatrix::identity(4), slot, 2), ComplexMatrix::identity(16)), 0.0);
  EXPECT_THROW(embed(z, 2, 2), InvalidArgument);
  EXPECT_THROW(embed(z, -1, 2), InvalidArgument);
  EXPECT_EQ(embed(z, 1, 3).dim(), 8u);
}

TEST(Embed, DistinctSlotsCommute) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(4, rng);
    const ComplexMatrix b = testing::random_hermitian(4, rng);
    std::vector<double> da(4), db(4);
    std::normal_distribution<double> n;
    for (auto& v : da) v = n(rng);
    for (auto& v : db) v = n(rng);
    const ComplexMatrix pairs[2][2] = {{a, b}, {ComplexMatrix::diagonal(da), ComplexMatrix::diagonal(db)}};
    for (const auto& pr : pairs) {
      const ComplexMatrix ea = embed(pr[0], 0, 2);
      const ComplexMatrix eb = embed(pr[1], 1, 2);
      EXPECT_EQ(max_abs_diff(ea * eb, eb * ea), 0.0);
    }
  }
}

TEST(Grid, DiagonalOutputsAreRealDiagonal) {
  const Grid g(8, 0.3, 0.5);
  EXPECT_TRUE(position_operator(g).is_real_diagonal());
  EXPECT_TRUE(function_of_position(g, [](double a) { return std::exp(-a); }).is_real_diagonal());
}

}  // namespace
}  // namespace wdwvqe
