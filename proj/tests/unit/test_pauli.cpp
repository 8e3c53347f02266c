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
#include "wdwvqe/errors.hpp"
#include "wdwvqe/grid.hpp"
#include "wdwvqe/models.hpp"
#include "wdwvqe/pauli.hpp"

namespace wdwvqe {
namespace {

std::string labels_of(unsigned code, int n) {
  static constexpr char kLabels[] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int q = n - 1; q >= 0; --q, code /= 4) s[static_cast<std::size_t>(q)] = kLabels[code % 4];
  return s;
}

TEST(PauliString, Validation) {
  EXPECT_THROW(PauliString(""), InvalidArgument);
  EXPECT_THROW(PauliString("XA"), InvalidArgument);
  EXPECT_THROW(PauliString("x"), InvalidArgument);
  EXPECT_TRUE(PauliString("III").is_identity());
  EXPECT_FALSE(PauliString("IZI").is_identity());
}

TEST(PauliString, MatrixMatchesDenseKronecker) {
  for (int n = 1; n <= 3; ++n)
    for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
      const std::string l = labels_of(code, n);
      const ComplexMatrix m = PauliString(l).matrix();
      EXPECT_EQ(max_abs_diff(m, testing::dense_pauli(l)), 0.0) << l;
      EXPECT_EQ(m.hermiticity_error(), 0.0);
      EXPECT_LT(m.unitarity_error(), 1e-15);
      if (code != 0) EXPECT_EQ(m.trace(), Complex(0.0));
    }
}

TEST(PauliSum, AddMergesAndSorts) {
  PauliSum s(2);
  s.add(1.0, "ZZ");
  s.add(0.5, "IX");
  s.add(0.25, "ZZ");
  s.add(2.0, "XY");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.terms()[0].string.labels(), "IX");
  EXPECT_EQ(s.terms()[1].string.labels(), "XY");
  EXPECT_EQ(s.terms()[2].string.labels(), "ZZ");
  EXPECT_DOUBLE_EQ(s.coeff("ZZ"), 1.25);
  EXPECT_DOUBLE_EQ(s.coeff("YY"), 0.0);
  EXPECT_THROW(s.add(1.0, "Z"), InvalidArgument);
  s.prune(0.6);
  EXPECT_EQ(s.size(), 2u);
}

TEST(Decompose, Identity) {
  const PauliSum s = decompose(ComplexMatrix::identity(4));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.terms()[0].string.labels(), "II");
  EXPECT_DOUBLE_EQ(s.terms()[0].coeff, 1.0);
}

TEST(Decompose, RejectsNonHermitianAndBadSize) {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(decompose(m), NotHermitian);
  EXPECT_THROW(decompose(ComplexMatrix::identity(3)), InvalidArgument);
}

TEST(Decompose, CoefficientsMatchDenseTrace) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    const ComplexMatrix h = testing::random_hermitian(std::size_t{1} << n, rng);
    const PauliSum s = decompose(h, 0.0);
    EXPECT_EQ(s.size(), std::size_t{1} << (2 * n));
    for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
      const std::string l = labels_of(code, n);
      const Complex c = testing::dense_coefficient(h, l);
      EXPECT_LT(std::abs(c.imag()), 1e-12);
      EXPECT_NEAR(s.coeff(l), c.real(), 1e-12) << l;
    }
  }
}

TEST(Decompose, OrderIsLexicographic) {
  std::mt19937_64 rng(5);
  const PauliSum s = decompose(testing::random_hermitian(8, rng), 0.0);
  for (std::size_t i = 1; i < s.size(); ++i)
    EXPECT_LT(s.terms()[i - 1].string.labels(), s.terms()[i].string.labels());
}

TEST(Decompose, RoundTripAndParseval) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 4;
    const ComplexMatrix h = testing::random_hermitian(std::size_t{1} << n, rng);
    const PauliSum s = decompose(h, 0.0);
    EXPECT_LT(max_abs_diff(reconstruct(s), h), 1e-12);
    double sq = 0.0;
    for (const auto& t : s.terms()) sq += t.coeff * t.coeff;
    const double fro = h.frobenius_norm();
    EXPECT_NEAR(sq * static_cast<double>(h.dim()), fro * fro, 1e-10);
  }
}

TEST(Reconstruct, Examples) {
  PauliSum s(2);
  s.add(0.5, "ZI");
  s.add(0.5, "ZZ");
  const ComplexMatrix m = reconstruct(s);
  const double expected[] = {1, 0, -1, 0};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k)
      EXPECT_EQ(m(j, k), Complex(j == k ? expected[j] : 0.0));

  const ComplexMatrix zero = reconstruct(PauliSum(2));
  EXPECT_EQ(zero.max_abs(), 0.0);
  EXPECT_EQ(zero.dim(), 4u);
  EXPECT_EQ(reconstruct(s).hermiticity_error(), 0.0);
}

TEST(TensorExtend, SingleTerm) {
  PauliSum z(1);
  z.add(1.0, "Z");
  const PauliSum e = tensor_extend(z, 1, 2);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.terms()[0].string.labels(), "IZ");

  PauliSum zz(2);
  zz.add(1.0, "IZ");
  EXPECT_EQ(tensor_extend(zz, 1, 2).terms()[0].string.labels(), "IIIZ");
  EXPECT_EQ(tensor_extend(zz, 0, 2).terms()[0].string.labels(), "IZII");
  EXPECT_THROW(tensor_extend(zz, 2, 2), InvalidArgument);
}

TEST(TensorExtend, MatchesEmbedOfReconstruction) {
  std::mt19937_64 rng(8);
  const ComplexMatrix h = testing::random_hermitian(4, rng);
  const PauliSum s = decompose(h);
  for (int slot = 0; slot < 3; ++slot)
    EXPECT_LT(max_abs_diff(reconstruct(tensor_extend(s, slot, 3)), embed(h, slot, 3)), 1e-12);
}

// With the model momentum convention the 1-D oscillator decomposes onto
// exactly seven strings at any spacing, with fixed coefficient ratios.
TEST(Decompose, OscillatorStructureIsSpacingIndependent) {
  for (double d : {0.3, 1.0, std::sqrt(2.0 * std::numbers::pi) / 4.0, 2.5}) {
    ModelSpec spec;
    spec.grid = Grid(4, d, 0.0, kModelMomentumRoll);
    const PauliSum s = build_model(spec).pauli;
    ASSERT_EQ(s.size(), 7u);
    const char* expected[] = {"II", "IY", "IZ", "XI", "XY", "ZI", "ZZ"};
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(s.terms()[i].string.labels(), expected[i]);
    const double iz = s.coeff("IZ");
    EXPECT_NEAR(s.coeff("ZI") / iz, 2.0, 1e-10);
    EXPECT_NEAR(s.coeff("ZZ") / iz, 2.0, 1e-10);
    EXPECT_NEAR(s.coeff("IY") / s.coeff("XY"), -1.0, 1e-10);
  }
}

}  // namespace
}  // namespace wdwvqe
