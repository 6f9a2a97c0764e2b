/* Copyright 2026 The cai-init Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <cmath>

#include "cai/errors.hpp"
#include "cai/orthobasis.hpp"
#include "cai/random.hpp"

namespace cai {
namespace {

RealTensor random_square(std::size_t n, RandomStream& rng) {
  RealTensor t({n, n});
  for (double& v : t.data()) v = rng.normal();
  return t;
}

double gram(const RealTensor& m, std::size_t a, std::size_t b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m.extent(1); ++j) acc += m(a, j) * m(b, j);
  return acc;
}

TEST(SymmetrizeTest, IdentityGetsRidge) {
  const RealTensor eye({3, 3}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const RealTensor s = symmetrize(eye);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(s(i, j), i == j ? 1.0 + 1e-8 : 0.0);
}

TEST(SymmetrizeTest, ScalarCase) {
  const RealTensor s = symmetrize(RealTensor({1, 1}, {-3.0}));
  EXPECT_DOUBLE_EQ(s[0], 9.0 + 1e-8 * 9.0);
}

TEST(SymmetrizeTest, RandomIsExactlySymmetricAndPositiveDefinite) {
  RandomStream rng(41);
  const RealTensor s = symmetrize(random_square(4, rng));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(s(i, j), s(j, i));
  const EigenDecomposition eig = eigen_symmetric(s);
  for (double lambda : eig.values.data()) EXPECT_GT(lambda, 0.0);
}

TEST(SymmetrizeTest, NonSquareIsDomainError) {
  EXPECT_THROW(symmetrize(RealTensor({2, 3})), DomainError);
  EXPECT_THROW(symmetrize(RealTensor({4})), DomainError);
}

TEST(EigenSymmetricTest, DiagonalInput) {
  const EigenDecomposition sorted = eigen_symmetric(RealTensor({2, 2}, {3, 0, 0, 1}));
  EXPECT_EQ(sorted.values, RealTensor({2}, {3, 1}));
  EXPECT_EQ(sorted.vectors, RealTensor({2, 2}, {1, 0, 0, 1}));

  const EigenDecomposition eig = eigen_symmetric(RealTensor({2, 2}, {1, 0, 0, 3}));
  EXPECT_EQ(eig.values[0], 3.0);
  EXPECT_EQ(eig.values[1], 1.0);
  // Sorted descending, so the columns are a permutation of I.
  EXPECT_EQ(eig.vectors, RealTensor({2, 2}, {0, 1, 1, 0}));
}

// lambda^2 - 4 lambda + 3 = 0 gives 3 and 1 with eigenvectors (1,1)/sqrt2 and
// (1,-1)/sqrt2.
TEST(EigenSymmetricTest, TwoByTwoClosedForm) {
  const EigenDecomposition eig = eigen_symmetric(RealTensor({2, 2}, {2, 1, 1, 2}));
  EXPECT_NEAR(eig.values[0], 3.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(eig.vectors(0, 0), h, 1e-14);
  EXPECT_NEAR(eig.vectors(1, 0), h, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(0, 1)), h, 1e-14);
  EXPECT_NEAR(eig.vectors(0, 1), -eig.vectors(1, 1), 1e-14);
}

TEST(EigenSymmetricTest, RandomEightByEightReconstructs) {
  RandomStream rng(42);
  const RealTensor s = symmetrize(random_square(8, rng));
  const EigenDecomposition eig = eigen_symmetric(s);
  double err = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      double acc = 0.0;
      double dot = 0.0;
      for (std::size_t k = 0; k < 8; ++k) {
        acc += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
        dot += eig.vectors(k, i) * eig.vectors(k, j);
      }
      err = std::max(err, std::abs(acc - s(i, j)));
      EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-10);
    }
    // S q = lambda q
    for (std::size_t r = 0; r < 8; ++r) {
      double sq = 0.0;
      for (std::size_t k = 0; k < 8; ++k) sq += s(r, k) * eig.vectors(k, i);
      EXPECT_NEAR(sq, eig.values[i] * eig.vectors(r, i), 1e-8 * 20.0);
    }
  }
  EXPECT_LT(err, 1e-9);
  for (std::size_t i = 1; i < 8; ++i) EXPECT_GE(eig.values[i - 1], eig.values[i]);
}

TEST(EigenSymmetricTest, SignConventionLargestComponentPositive) {
  RandomStream rng(43);
  const EigenDecomposition eig = eigen_symmetric(symmetrize(random_square(6, rng)));
  for (std::size_t c = 0; c < 6; ++c) {
    std::size_t peak = 0;
    for (std::size_t r = 1; r < 6; ++r)
      if (std::abs(eig.vectors(r, c)) > std::abs(eig.vectors(peak, c))) peak = r;
    EXPECT_GT(eig.vectors(peak, c), 0.0);
  }
}

TEST(EigenSymmetricTest, ErrorPaths) {
  EXPECT_THROW(eigen_symmetric(RealTensor({2, 2}, {1, 2, 3, 4})), DomainError);
  EXPECT_THROW(eigen_symmetric(RealTensor({2, 2}, {1, NAN, NAN, 1})), DomainError);
  EXPECT_THROW(eigen_symmetric(RealTensor({2, 3})), DomainError);
  EXPECT_THROW(eigen_symmetric(RealTensor({2, 2}, {2, 1, 1, 2}), 0), NumericError);
}

TEST(EigenSymmetricTest, DegenerateSpectrumStillOrthonormal) {
  const EigenDecomposition eig = eigen_symmetric(RealTensor({3, 3}, {2, 0, 0, 0, 2, 0, 0, 0, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < 3; ++k) dot += eig.vectors(k, i) * eig.vectors(k, j);
      EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-15);
    }
  }
}

TEST(MakeBasisTest, OneByOne) {
  const OrthoBasis b = make_basis({1, 1, 9});
  EXPECT_EQ(std::abs(b.matrix[0]), 1.0);
}

TEST(MakeBasisTest, UndercompleteGramIsIdentity) {
  const OrthoBasis b = make_basis({3, 8, 10});
  ASSERT_EQ(b.matrix.shape(), (Shape{3, 8}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(gram(b.matrix, i, j), i == j ? 1.0 : 0.0, 1e-10);
}

TEST(MakeBasisTest, OvercompleteIsBlockwiseOrthonormal) {
  const OrthoBasis b = make_basis({10, 4, 11});
  ASSERT_EQ(b.matrix.shape(), (Shape{10, 4}));
  EXPECT_EQ(b.block_size, 4u);
  for (std::size_t block = 0; block < 10; block += 4) {
    const std::size_t end = std::min<std::size_t>(10, block + 4);
    for (std::size_t i = block; i < end; ++i)
      for (std::size_t j = block; j < end; ++j)
        EXPECT_NEAR(gram(b.matrix, i, j), i == j ? 1.0 : 0.0, 1e-10);
  }
  for (double v : b.matrix.data()) EXPECT_LE(std::abs(v), 1.0 + 1e-12);
}

TEST(MakeBasisTest, DeterministicPerSeed) {
  EXPECT_EQ(make_basis({7, 5, 123}).matrix, make_basis({7, 5, 123}).matrix);
  EXPECT_NE(make_basis({7, 5, 123}).matrix, make_basis({7, 5, 124}).matrix);
}

TEST(MakeBasisTest, RejectsEmptyRequest) {
  EXPECT_THROW(make_basis({0, 3, 1}), DomainError);
  EXPECT_THROW(make_basis({3, 0, 1}), DomainError);
}

TEST(OrthobasisPropertyTest, UnitRowsAndEntryBound) {
  RandomStream rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.bits() % 20;
    const std::size_t dim = 1 + rng.bits() % 16;
    const OrthoBasis b = make_basis({rows, dim, rng.bits()});
    for (std::size_t i = 0; i < rows; ++i) ASSERT_NEAR(gram(b.matrix, i, i), 1.0, 1e-10);
    for (double v : b.matrix.data()) ASSERT_LE(std::abs(v), 1.0 + 1e-12);
  }
}

// Grand mean of 10^3 independent 16x16 bases stays inside a 3-sigma band.
TEST(OrthobasisPropertyTest, ZeroMeanTendency) {
  double sum = 0.0;
  double sq = 0.0;
  const int count = 1000;
  for (int i = 0; i < count; ++i) {
    const OrthoBasis b = make_basis({16, 16, static_cast<std::uint64_t>(5000 + i)});
    for (double v : b.matrix.data()) {
      sum += v;
      sq += v * v;
    }
  }
  const double n = count * 256.0;
  const double mean = sum / n;
  const double stddev = std::sqrt(sq / n - mean * mean);
  EXPECT_LT(std::abs(mean), 3.0 / std::sqrt(n) * stddev);
}

}  // namespace
}  // namespace cai
