// Copyright 2026 The crossgame Authors.
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


#include "crossgame/spectrum.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace crossgame {
namespace {

const SpectrumModel kFig4{1.0, 200.0, 99.5, 100.5};

TEST(SpectrumModelTest, Validation) {
  EXPECT_NO_THROW(kFig4.Validate());
  EXPECT_THROW((SpectrumModel{0.0, 1.0, 0.0, 1.0}).Validate(), std::invalid_argument);
  EXPECT_THROW((SpectrumModel{2.0, 1.0, 0.0, 1.0}).Validate(), std::invalid_argument);
  EXPECT_THROW((SpectrumModel{1.0, 2.0, -1.0, 1.0}).Validate(), std::invalid_argument);
  EXPECT_THROW((SpectrumModel{1.0, 2.0, 1.0, 0.0}).Validate(), std::invalid_argument);
  EXPECT_THROW((SpectrumModel{1.0, NAN, 1.0, 1.0}).Validate(), std::invalid_argument);
}

TEST(SpectrumModelTest, EqualLengthCross) {
  const SpectrumModel m = EqualLengthCross(1.0, 200.0);
  EXPECT_EQ(m.c, 99.5);
  EXPECT_EQ(m.c_prime, 100.5);
}

TEST(ContainsTest, Examples) {
  EXPECT_TRUE(Contains(kFig4, {1.0, 0.0}, 0.0));
  EXPECT_FALSE(Contains(kFig4, {0.5, 0.0}, 0.0));
  EXPECT_TRUE(Contains(kFig4, {100.5, 99.5}, 0.0));
}

TEST(ContainsTest, ToleranceIsEuclidean) {
  EXPECT_FALSE(Contains(kFig4, {100.5, 100.0}, 0.4));
  EXPECT_TRUE(Contains(kFig4, {100.5, 100.0}, 0.5));
  EXPECT_TRUE(Contains(kFig4, {0.7, 0.4}, 0.5));
  EXPECT_FALSE(Contains(kFig4, {50.0, 1.0}, 0.5));
  EXPECT_THROW(Contains(kFig4, {1.0, 0.0}, -1.0), std::invalid_argument);
}

TEST(SampleCrossTest, MinimalSample) {
  const Spectrum s = SampleCross(kFig4, 2, 1);
  EXPECT_EQ(s.eigenvalues(),
            (std::vector<Complex>{{1, 0}, {200, 0}, {100.5, 99.5}, {100.5, -99.5}}));
}

TEST(SampleCrossTest, EmptyImaginarySegmentRejected) {
  EXPECT_THROW(SampleCross({1.0, 1.0, 0.0, 1.0}, 2, 1), std::invalid_argument);
}

TEST(SampleCrossTest, EvenSpacing) {
  const Spectrum s = SampleCross({1.0, 3.0, 1.0, 2.0}, 3, 1);
  EXPECT_EQ(s.eigenvalues(),
            (std::vector<Complex>{{1, 0}, {2, 0}, {3, 0}, {2, 1}, {2, -1}}));
}

TEST(SampleCrossTest, DegenerateCountsRejected) {
  EXPECT_THROW(SampleCross(kFig4, 1, 1), std::invalid_argument);
  EXPECT_THROW(SampleCross(kFig4, 2, 0), std::invalid_argument);
}

TEST(SampleCrossTest, ImaginaryPartsEvenlySpacedUpToC) {
  const Spectrum s = SampleCross(kFig4, 100, 50);
  ASSERT_EQ(s.size(), 200u);
  EXPECT_EQ(s.eigenvalues()[0], Complex(1.0, 0.0));
  EXPECT_EQ(s.eigenvalues()[99], Complex(200.0, 0.0));
  EXPECT_EQ(s.eigenvalues()[198].imag(), 99.5);
  for (int k = 0; k < 50; ++k) {
    const Complex z = s.eigenvalues()[100 + 2 * k];
    EXPECT_NEAR(z.imag(), 99.5 * (k + 1) / 50.0, 1e-12);
    EXPECT_GT(z.imag(), 0.0);
  }
}

TEST(SampleCrossTest, SamplesLieOnTheCross) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const double mu = testing::LogUniform(rng, 1e-3, 1e3);
    const double L = mu * testing::LogUniform(rng, 1.0, 1e4);
    const SpectrumModel m{mu, L, rng.Uniform(0.01, 2.0) * L, rng.Uniform(0.1, 2.0) * L};
    const int n_real = 2 + static_cast<int>(rng.NextU64() % 30);
    const int n_pairs = 1 + static_cast<int>(rng.NextU64() % 30);
    const Spectrum s = SampleCross(m, n_real, n_pairs);
    ASSERT_EQ(s.size(), static_cast<std::size_t>(n_real + 2 * n_pairs));
    for (Complex z : s.eigenvalues()) {
      ASSERT_TRUE(Contains(m, z, 1e-12 * std::max(1.0, std::abs(z))))
          << z << " trial " << trial;
    }
  }
}

TEST(SampleCrossTest, EqualLengthExtremesAreMuAndL) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const double mu = testing::LogUniform(rng, 1e-2, 1e2);
    const double L = mu * testing::LogUniform(rng, 1.0 + 1e-9, 1e5);
    const SpectralExtremes e = Extremes(SampleCross(EqualLengthCross(mu, L), 5, 3));
    EXPECT_EQ(e.min_re, mu);
    EXPECT_EQ(e.max_abs, L);
  }
}

TEST(SpectrumTest, RejectsNonConjugateClosedSets) {
  EXPECT_THROW(Spectrum(std::vector<Complex>{{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Spectrum(std::vector<Complex>{{1, 1}, {1, 1}, {1, -1}}), std::invalid_argument);
  EXPECT_NO_THROW(Spectrum(std::vector<Complex>{{1, 1}, {1, -1}, {2, 0}}));
}

TEST(SpectrumTest, RejectsNonPositiveRealPartsAndEmpty) {
  EXPECT_THROW(Spectrum(std::vector<Complex>{{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Spectrum(std::vector<Complex>{{-1, 1}, {-1, -1}}), std::invalid_argument);
  EXPECT_THROW(Spectrum(std::vector<Complex>{}), std::invalid_argument);
}

TEST(ExtremesTest, MinimalCross) {
  const SpectralExtremes e = Extremes(SampleCross(kFig4, 2, 1));
  EXPECT_EQ(e.min_re, 1.0);
  EXPECT_EQ(e.max_abs, 200.0);
  EXPECT_EQ(e.min_abs_sq, 1.0);
  EXPECT_DOUBLE_EQ(e.min_re_inv, 1.0 / 200.0);
  EXPECT_DOUBLE_EQ(e.tau, 1.0 / 200.0);
}

TEST(ExtremesTest, Singleton) {
  const SpectralExtremes e = Extremes(Spectrum(std::vector<Complex>{{3.0, 0.0}}));
  EXPECT_EQ(e.min_re, 3.0);
  EXPECT_EQ(e.max_abs, 3.0);
  EXPECT_EQ(e.min_abs_sq, 9.0);
  EXPECT_DOUBLE_EQ(e.min_re_inv, 1.0 / 3.0);
  EXPECT_EQ(e.tau, 1.0);
}

TEST(ExtremesTest, ConjugatePair) {
  const SpectralExtremes e = Extremes(Spectrum(std::vector<Complex>{{1, 1}, {1, -1}}));
  EXPECT_EQ(e.min_re, 1.0);
  EXPECT_DOUBLE_EQ(e.max_abs, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(e.min_abs_sq, 2.0);
  EXPECT_DOUBLE_EQ(e.min_re_inv, 0.5);
}

TEST(ExtremesTest, InvariantsHoldOnRandomCrosses) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const double mu = testing::LogUniform(rng, 1e-2, 1e2);
    const double L = mu * testing::LogUniform(rng, 1.0, 1e4);
    const SpectrumModel m{mu, L, rng.Uniform(0.01, 1.0) * L, rng.Uniform(0.5, 1.5) * L};
    const SpectralExtremes e = Extremes(SampleCross(m, 4, 4));
    EXPECT_GT(e.min_re, 0.0);
    EXPECT_GE(e.max_abs, e.min_re);
    EXPECT_GT(e.tau, 0.0);
    EXPECT_LE(e.tau, 1.0);
  }
}

TEST(CrossExtremePointsTest, MatchesModel) {
  const Spectrum s = CrossExtremePoints(kFig4);
  EXPECT_EQ(s.eigenvalues(),
            (std::vector<Complex>{{1, 0}, {200, 0}, {100.5, 99.5}, {100.5, -99.5}}));
}

}  // namespace
}  // namespace crossgame
