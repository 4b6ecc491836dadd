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


#include "crossgame/optimizers.h"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "crossgame/gamegen.h"
#include "crossgame/polyoracle.h"
#include "crossgame/spectrum.h"
#include "crossgame/tuner.h"
#include "test_util.h"

namespace crossgame {
namespace {

// One-dimensional game v(w) = lambda (w - w_star).
QuadraticGame ScalarGame(double lambda, double w_star) {
  QuadraticGame g;
  g.A = Matrix(1, 1, {lambda});
  g.w_star = Vector{w_star};
  g.b = Vector{-lambda * w_star};
  g.d1 = 1;
  g.d2 = 0;
  return g;
}

QuadraticGame SmallCrossGame(std::uint64_t seed) {
  Rng rng(seed);
  return BuildCrossGame(EqualLengthCross(1.0, 200.0), GameOptions{12, 6, false}, rng);
}

TEST(MethodTest, NamesAndParsing) {
  for (Method m : {Method::kGd, Method::kGdm, Method::kEg, Method::kEgm}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_FALSE(ParseMethod("adam").has_value());
  EXPECT_EQ(EvalsPerIteration(Method::kGdm), 1);
  EXPECT_EQ(EvalsPerIteration(Method::kEgm), 2);
}

TEST(RunGdTest, GeometricDecay) {
  const RunTrace t = RunGd(ScalarGame(1.0, 0.0), 0.5, Vector{1.0}, 10);
  ASSERT_EQ(t.distances.size(), 11u);
  for (int i = 0; i <= 10; ++i) EXPECT_EQ(t.distances[i], std::ldexp(1.0, -i));
  EXPECT_FALSE(t.diverged);
}

TEST(RunGdTest, ZeroStepIsConstant) {
  const RunTrace t = RunGd(ScalarGame(1.0, 2.0), 0.0, Vector{3.0}, 5);
  for (double d : t.distances) EXPECT_EQ(d, 1.0);
}

TEST(RunGdTest, StepTwoOscillates) {
  const RunTrace t = RunGd(ScalarGame(1.0, 0.0), 2.0, Vector{1.0}, 6);
  for (double d : t.distances) EXPECT_EQ(d, 1.0);
}

TEST(RunGdmTest, ZeroMomentumIsGdBitwise) {
  const QuadraticGame g = SmallCrossGame(1);
  const Vector w0(g.dim());
  EXPECT_EQ(RunGdm(g, 0.009, 0.0, w0, 300).distances, RunGd(g, 0.009, w0, 300).distances);
}

TEST(RunGdmTest, DampedFirstStepAnnihilates) {
  const RunTrace t = RunGdm(ScalarGame(1.0, 0.0), 1.0, 0.0, Vector{1.0}, 4);
  EXPECT_EQ(t.distances, (std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0}));
}

TEST(RunEgTest, ScalarCompositionFactor) {
  const RunTrace t = RunEg(ScalarGame(1.0, 0.0), 0.5, Vector{1.0}, 8);
  for (int i = 0; i <= 8; ++i) EXPECT_DOUBLE_EQ(t.distances[i], std::pow(0.75, i));
  EXPECT_EQ(t.params.gamma, 0.5);
}

TEST(RunEgTest, ZeroStepIsConstant) {
  const RunTrace t = RunEg(ScalarGame(2.0, 1.0), 0.0, Vector{-1.0}, 5);
  for (double d : t.distances) EXPECT_EQ(d, 2.0);
}

TEST(RunEgmTest, NoMomentumIsEgBitwise) {
  const QuadraticGame g = SmallCrossGame(2);
  const Vector w0(g.dim());
  EXPECT_EQ(RunEgm(g, {0.004, 0.004, 0.0}, w0, 300).distances,
            RunEg(g, 0.004, w0, 300).distances);
}

TEST(RunEgmTest, OptimalParametersReachTheFloorQuickly) {
  const QuadraticGame g = SmallCrossGame(3);
  const RunTrace t = RunEgm(g, OptimalEgm(1.0, 200.0, 99.5), Vector(g.dim()), 400);
  EXPECT_LE(t.distances.back() / t.distances.front(), 1e-12);
}

TEST(RunTraceTest, DeterministicAndCountsEvaluations) {
  const QuadraticGame g = SmallCrossGame(4);
  const Vector w0(g.dim());
  const Hyperparams p = OptimalEgm(1.0, 200.0, 99.5);
  const RunTrace a = RunEgm(g, p, w0, 100);
  const RunTrace b = RunEgm(g, p, w0, 100);
  EXPECT_EQ(a.distances, b.distances);
  EXPECT_EQ(a.iterations(), 100);
  EXPECT_EQ(a.vf_evals.front(), 0);
  EXPECT_EQ(a.vf_evals.back(), 200);
  for (std::size_t i = 1; i < a.vf_evals.size(); ++i) {
    EXPECT_EQ(a.vf_evals[i] - a.vf_evals[i - 1], 2);
  }
  EXPECT_EQ(RunGdm(g, 0.01, 0.1, w0, 77).vf_evals.back(), 77);
  EXPECT_EQ(RunGd(g, 0.01, w0, 77).vf_evals.back(), 77);
  EXPECT_EQ(RunEg(g, 0.001, w0, 77).vf_evals.back(), 154);
  EXPECT_EQ(a.distances.front(), EuclideanNorm(g.w_star));
}

TEST(RunTraceTest, DivergenceStopsTheRun) {
  const RunTrace t = RunGd(ScalarGame(1.0, 0.0), 3.0, Vector{1.0}, 1000);
  EXPECT_TRUE(t.diverged);
  EXPECT_LT(t.iterations(), 1000);
  EXPECT_GT(t.distances.back(), kDivergenceFactor);
  EXPECT_LE(t.distances[t.distances.size() - 2], kDivergenceFactor);
  EXPECT_EQ(t.vf_evals.size(), t.distances.size());
}

TEST(RunTraceTest, NonFiniteIterateCountsAsDivergence) {
  const RunTrace t = RunGd(ScalarGame(1e300, 0.0), 1e300, Vector{1.0}, 10);
  EXPECT_TRUE(t.diverged);
  EXPECT_EQ(t.iterations(), 1);
  EXPECT_FALSE(std::isfinite(t.distances.back()));
}

TEST(RunTraceTest, BadInputsThrow) {
  const QuadraticGame g = ScalarGame(1.0, 0.0);
  EXPECT_THROW(RunGd(g, 0.1, Vector{1.0, 2.0}, 5), std::invalid_argument);
  EXPECT_THROW(RunGd(g, 0.1, Vector{1.0}, 0), std::invalid_argument);
  EXPECT_THROW(RunGdm(g, 0.1, 1.0, Vector{1.0}, 5), std::invalid_argument);
  EXPECT_THROW(RunGd(g, -0.1, Vector{1.0}, 5), std::invalid_argument);
  EXPECT_THROW(RunEgm(g, {0.1, NAN, 0.1}, Vector{1.0}, 5), std::invalid_argument);
}

// A random point on the Figure 4 cross.
Complex CrossPoint(Rng& rng) {
  if (rng.Uniform() < 0.5) return rng.Uniform(1.0, 200.0);
  return {100.5, rng.Uniform(-99.5, 99.5)};
}

// Runs the method on v(w) = lambda (w - w_star) from w0 = w_star + e0 and
// returns the worst gap to |P_t(lambda) e0| for t <= 60, relative to
// |P_t(lambda) e0| once an absolute allowance abs_floor is subtracted.
template <class Residual>
double WorstPolynomialGap(Method method, const Hyperparams& p, Complex lambda,
                          Complex w_star, double abs_floor, Residual residual) {
  const Complex e0(1.0, 0.5);
  const RunTrace trace = RunMethod(method, p, ScalarField{lambda, w_star}, w_star + e0, 60);
  double worst = 0.0;
  for (int t = 0; t <= trace.iterations(); ++t) {
    const double want = std::abs(residual(t) * e0);
    const double excess = std::max(0.0, std::abs(trace.distances[t] - want) - abs_floor);
    if (excess == 0.0) continue;
    worst = std::max(worst, want > 0.0 ? excess / want : INFINITY);
  }
  return worst;
}

void ExpectPolynomialIdentities(Complex w_star, double abs_floor, double tol) {
  Rng rng(61);
  const Hyperparams egm = OptimalEgm(1.0, 200.0, 99.5);
  const Hyperparams gd{1.0 / 200.0, 0.0, 0.0};
  const Hyperparams eg{1.0 / 800.0, 1.0 / 800.0, 0.0};
  const Hyperparams gdm{0.009, 0.0, 0.08};
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = CrossPoint(rng);
    EXPECT_LE(WorstPolynomialGap(Method::kGd, gd, z, w_star, abs_floor,
                                 [&](int t) { return std::pow(1.0 - gd.h * z, t); }),
              tol)
        << z;
    EXPECT_LE(WorstPolynomialGap(
                  Method::kEg, eg, z, w_star, abs_floor,
                  [&](int t) { return std::pow(1.0 - eg.h * z * (1.0 - eg.h * z), t); }),
              tol)
        << z;
    EXPECT_LE(WorstPolynomialGap(Method::kGdm, gdm, z, w_star, abs_floor,
                                 [&](int t) { return ResidualGdm(gdm, z, t); }),
              tol)
        << z;
    EXPECT_LE(WorstPolynomialGap(Method::kEgm, egm, z, w_star, abs_floor,
                                 [&](int t) { return ResidualEgmChebyshev(egm, z, t); }),
              tol)
        << z;
    EXPECT_LE(WorstPolynomialGap(Method::kEgm, egm, z, w_star, abs_floor,
                                 [&](int t) { return ResidualEgmRecurrence(egm, z, t); }),
              tol)
        << z;
  }
}

TEST(PolynomialIdentityTest, ErrorFollowsTheResidualPolynomial) {
  // With w_star = 0 the iterate is the error itself, so the check is relative.
  ExpectPolynomialIdentities(0.0, 0.0, 1e-9);
}

TEST(PolynomialIdentityTest, HoldsUpToRoundingOfTheShiftedIterate) {
  // Otherwise the error is only resolved to a few eps |w_star|.
  ExpectPolynomialIdentities({0.3, -0.7}, 1e-14, 1e-9);
}

TEST(FitRateTest, GeometricTrace) {
  RunTrace t;
  for (int i = 0; i <= 40; ++i) t.distances.push_back(std::ldexp(1.0, -i));
  EXPECT_NEAR(FitRate(t, 0, 40), 0.5, 1e-12);
  EXPECT_NEAR(FitRate(t, 10, 20), 0.5, 1e-12);
}

TEST(FitRateTest, ConstantTrace) {
  RunTrace t;
  t.distances.assign(20, 3.0);
  EXPECT_EQ(FitRate(t, 0, 19), 1.0);
}

TEST(FitRateTest, FloorAndWindowErrors) {
  RunTrace t;
  for (int i = 0; i <= 60; ++i) t.distances.push_back(std::ldexp(1.0, -i));
  EXPECT_THROW(FitRate(t, 30, 60), std::invalid_argument);
  EXPECT_THROW(FitRate(t, 5, 5), std::invalid_argument);
  EXPECT_THROW(FitRate(t, 0, 61), std::invalid_argument);
  t.distances[3] = 0.0;
  EXPECT_THROW(FitRate(t, 0, 10), std::invalid_argument);
}

TEST(FitRateTest, RecoversTheScalarContraction) {
  const RunTrace t = RunGd(ScalarGame(1.0, 0.0), 0.1, Vector{1.0}, 200);
  EXPECT_NEAR(FitRate(t, 10, 200), 0.9, 1e-12);
}

}  // namespace
}  // namespace crossgame
