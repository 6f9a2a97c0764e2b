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
#include "cai/random.hpp"
#include "cai/spectral.hpp"
#include "oracles.hpp"

namespace cai {
namespace {

RealTensor random_real(Shape shape, RandomStream& rng) {
  RealTensor t(std::move(shape));
  for (double& v : t.data()) v = rng.normal();
  return t;
}

oracle::Grid to_grid(const RealTensor& t) {
  const std::size_t rows = t.rank() == 2 ? t.extent(0) : 1;
  const std::size_t cols = t.rank() == 2 ? t.extent(1) : t.extent(0);
  oracle::Grid g{rows, cols, {}};
  for (double v : t.data()) g.v.emplace_back(v, 0.0);
  return g;
}

TEST(Forward2dTest, AllOnesIsDcOnly) {
  const ComplexTensor a = forward_2d(RealTensor::filled({2, 2}, 1.0));
  ASSERT_EQ(a.shape(), (Shape{2, 2}));
  EXPECT_EQ(a(0, 0), Complex(4.0, 0.0));
  EXPECT_EQ(a(0, 1), Complex(0.0, 0.0));
  EXPECT_EQ(a(1, 0), Complex(0.0, 0.0));
  EXPECT_EQ(a(1, 1), Complex(0.0, 0.0));
}

TEST(Forward2dTest, ImpulseIsFlat) {
  for (Shape shape : {Shape{1, 1}, Shape{3, 5}, Shape{4, 4}, Shape{7, 2}}) {
    RealTensor delta(shape);
    delta[0] = 1.0;
    const ComplexTensor spectrum = forward_2d(delta);
    for (const Complex& a : spectrum.data()) EXPECT_NEAR(std::abs(a - Complex(1.0, 0.0)), 0.0, 1e-15);
  }
}

TEST(Forward2dTest, MatchesNaiveSum) {
  RandomStream rng(21);
  const RealTensor x = random_real({3, 5}, rng);
  const ComplexTensor fast = forward_2d(x);
  const oracle::Grid slow = oracle::naive_forward(to_grid(x));
  ASSERT_EQ(fast.shape(), (Shape{3, 3}));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) EXPECT_LT(std::abs(fast(k, l) - slow.at(k, l)), 1e-10);
}

TEST(Forward2dTest, WrongRankIsDomainError) {
  EXPECT_THROW(forward_2d(RealTensor({4})), DomainError);
  EXPECT_THROW(forward_1d(RealTensor({2, 2})), DomainError);
}

TEST(Inverse2dTest, DcSpectrumGivesOnes) {
  ComplexTensor a({3, half_extent(4)});
  a(0, 0) = 12.0;
  const RealTensor ones = inverse_2d(a, 3, 4);
  for (double v : ones.data()) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(Inverse2dTest, InconsistentTargetIsDomainError) {
  const ComplexTensor a({3, 3});
  EXPECT_THROW(inverse_2d(a, 3, 6), DomainError);
  EXPECT_THROW(inverse_2d(a, 4, 4), DomainError);
  EXPECT_NO_THROW(inverse_2d(a, 3, 5));
  EXPECT_NO_THROW(inverse_2d(a, 3, 4));
}

// Arbitrary half-spectra: the output is the real part of the naive inverse of
// the Hermitian extension.
TEST(Inverse2dTest, ArbitraryHalfSpectrumMatchesNaiveInverse) {
  RandomStream rng(22);
  for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 4}, {5, 6}, {1, 7}, {6, 1}}) {
    ComplexTensor half({rows, half_extent(cols)});
    oracle::Grid g{rows, half_extent(cols), {}};
    for (Complex& a : half.data()) {
      a = Complex(rng.normal(), rng.normal());
      g.v.push_back(a);
    }
    const oracle::Grid expected = oracle::naive_inverse(oracle::hermitian_extension(g, cols));
    const RealTensor got = inverse_2d(half, rows, cols);
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected.v[i].real(), 1e-10);
  }
}

TEST(Forward1dTest, Examples) {
  const ComplexTensor ones = forward_1d(RealTensor::filled({4}, 1.0));
  ASSERT_EQ(ones.shape(), (Shape{3}));
  EXPECT_EQ(ones[0], Complex(4.0, 0.0));
  EXPECT_LT(std::abs(ones[1]), 1e-15);
  EXPECT_LT(std::abs(ones[2]), 1e-15);

  const ComplexTensor delta = forward_1d(RealTensor({4}, {1, 0, 0, 0}));
  for (const Complex& a : delta.data()) EXPECT_EQ(a, Complex(1.0, 0.0));
}

TEST(Forward1dTest, MatchesNaiveSumAtLengthSeven) {
  RandomStream rng(23);
  const RealTensor x = random_real({7}, rng);
  const ComplexTensor fast = forward_1d(x);
  const oracle::Grid slow = oracle::naive_forward(to_grid(x));
  ASSERT_EQ(fast.size(), 4u);
  for (std::size_t l = 0; l < 4; ++l) EXPECT_LT(std::abs(fast[l] - slow.at(0, l)), 1e-10);
}

TEST(Inverse1dTest, RoundTripDcAndOracle) {
  RandomStream rng(24);
  const RealTensor x = random_real({9}, rng);
  const RealTensor back = inverse_1d(forward_1d(x), 9);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(back[i], x[i], 1e-10);

  ComplexTensor dc({3});
  dc[0] = 5.0;
  const RealTensor ones = inverse_1d(dc, 5);
  for (double v : ones.data()) EXPECT_NEAR(v, 1.0, 1e-15);

  ComplexTensor arb({4});
  oracle::Grid g{1, 4, {}};
  for (Complex& a : arb.data()) {
    a = Complex(rng.normal(), rng.normal());
    g.v.push_back(a);
  }
  const oracle::Grid expected = oracle::naive_inverse(oracle::hermitian_extension(g, 6));
  const RealTensor got = inverse_1d(arb, 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], expected.v[i].real(), 1e-10);

  EXPECT_THROW(inverse_1d(arb, 9), DomainError);
}

TEST(CircularConvolveTest, DeltaIsIdentity) {
  RandomStream rng(25);
  const RealTensor x = random_real({4, 5}, rng);
  RealTensor delta({4, 5});
  delta[0] = 1.0;
  EXPECT_EQ(circular_convolve_2d(delta, x), x);
}

TEST(CircularConvolveTest, OnesTwoByTwo) {
  const RealTensor ones = RealTensor::filled({2, 2}, 1.0);
  EXPECT_EQ(circular_convolve_2d(ones, ones), RealTensor::filled({2, 2}, 4.0));
}

TEST(CircularConvolveTest, ShapeMismatchIsDomainError) {
  EXPECT_THROW(circular_convolve_2d(RealTensor({2, 2}), RealTensor({2, 3})), DomainError);
}

TEST(CircularConvolveTest, ConvolutionTheoremFourByFour) {
  RandomStream rng(26);
  const RealTensor f = random_real({4, 4}, rng);
  const RealTensor x = random_real({4, 4}, rng);
  const ComplexTensor lhs = forward_2d(circular_convolve_2d(f, x));
  const ComplexTensor ff = forward_2d(f);
  const ComplexTensor fx = forward_2d(x);
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs[i] - ff[i] * fx[i]), 1e-9);
}

// Invariants over sizes 1..16.
TEST(SpectralPropertyTest, RoundTripLinearityParseval) {
  RandomStream rng(27);
  for (std::size_t rows = 1; rows <= 16; rows += 3) {
    for (std::size_t cols = 1; cols <= 16; ++cols) {
      const RealTensor a = random_real({rows, cols}, rng);
      const RealTensor b = random_real({rows, cols}, rng);
      const ComplexTensor fa = forward_2d(a);
      const ComplexTensor fb = forward_2d(b);

      const RealTensor back = inverse_2d(fa, rows, cols);
      for (std::size_t i = 0; i < a.size(); ++i) ASSERT_NEAR(back[i], a[i], 1e-10);

      const double alpha = rng.normal();
      const double beta = rng.normal();
      RealTensor mix({rows, cols});
      for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = alpha * a[i] + beta * b[i];
      const ComplexTensor fmix = forward_2d(mix);
      for (std::size_t i = 0; i < fmix.size(); ++i) {
        ASSERT_LT(std::abs(fmix[i] - (alpha * fa[i] + beta * fb[i])), 1e-10);
      }

      double energy = 0.0;
      for (double v : a.data()) energy += v * v;
      double spectral = 0.0;
      const ComplexTensor full = hermitian_extend_2d(fa, cols);
      for (const Complex& v : full.data()) spectral += std::norm(v);
      spectral /= static_cast<double>(rows * cols);
      ASSERT_NEAR(spectral / energy, 1.0, 1e-9);
    }
  }
}

TEST(SpectralPropertyTest, MagnitudeBoundOnRandomSpectra) {
  RandomStream rng(28);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t rows = 1 + rng.bits() % 10;
    const std::size_t cols = 1 + rng.bits() % 10;
    ComplexTensor half({rows, half_extent(cols)});
    for (Complex& a : half.data()) a = Complex(rng.normal(), rng.normal());
    double l1 = 0.0;
    const ComplexTensor full = hermitian_extend_2d(half, cols);
    for (const Complex& a : full.data()) l1 += std::abs(a);
    const double bound = l1 / static_cast<double>(rows * cols) + 1e-12;
    const RealTensor signal = inverse_2d(half, rows, cols);
    for (double v : signal.data()) ASSERT_LE(std::abs(v), bound);
  }
}

}  // namespace
}  // namespace cai
