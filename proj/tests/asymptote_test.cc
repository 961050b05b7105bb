// Copyright 2026 The Freqlaw Authors.
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

#include "freqlaw/asymptote.h"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gtest/gtest.h"
#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

double Integrate(const AsymptoteSpec& spec, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(
      [&spec](double r) { return FrequencyAt(spec, r); }, lo, hi, 20, 1e-13);
}

TEST(FrequencyAtTest, TuringLawHeadAndDecay) {
  const auto spec = AsymptoteSpec::TuringLaw(10);
  EXPECT_EQ(FrequencyAt(spec, 1), 0.1);
  EXPECT_DOUBLE_EQ(FrequencyAt(spec, 11), 0.1 * std::exp(-1.0));
}

TEST(FrequencyAtTest, ZipfLaw) {
  EXPECT_EQ(FrequencyAt(AsymptoteSpec::ZipfLaw(1, 0), 4), 0.25);
  EXPECT_DOUBLE_EQ(FrequencyAt(AsymptoteSpec::ZipfLaw(2, 0.5), 1.5), 1.0);
}

TEST(FrequencyAtTest, RejectsRankBelowOne) {
  EXPECT_THROW(FrequencyAt(AsymptoteSpec::TuringLaw(1), 0.5),
               InvalidArgumentError);
  EXPECT_THROW(Cumulative(AsymptoteSpec::PowerLaw(1.5, 1), 0),
               InvalidArgumentError);
}

TEST(AsymptoteSpecTest, ValidatesParameters) {
  EXPECT_THROW(AsymptoteSpec::TuringLaw(0), InvalidArgumentError);
  EXPECT_THROW(AsymptoteSpec::ExponentialLaw(1, -1), InvalidArgumentError);
  EXPECT_THROW(AsymptoteSpec::PowerLaw(1.0, 1), InvalidArgumentError);
  EXPECT_THROW(AsymptoteSpec::PowerLaw(0.5, 1), InvalidArgumentError);
  EXPECT_THROW(AsymptoteSpec::ZipfLaw(1, -1), InvalidArgumentError);
  EXPECT_EQ(AsymptoteSpec::ZipfLaw(1, 0).theta(), 2);
  EXPECT_EQ(AsymptoteSpec::TuringLaw(3).theta(), 1);
  EXPECT_EQ(AsymptoteSpec::PowerLaw(1.25, 1).theta(), 1.25);
}

TEST(BetaThetaTest, InversePair) {
  EXPECT_EQ(BetaOfTheta(2), 1);
  EXPECT_EQ(ThetaOfBeta(2), 1.5);
  EXPECT_NEAR(ThetaOfBeta(BetaOfTheta(1.7)), 1.7, 1e-12);
  EXPECT_THROW(BetaOfTheta(1), InvalidArgumentError);
  EXPECT_THROW(ThetaOfBeta(0), InvalidArgumentError);
}

TEST(GeometricPmfTest, Values) {
  EXPECT_EQ(GeometricPmf(0.5, 1), 0.5);
  EXPECT_EQ(GeometricPmf(0.5, 2), 0.25);
  EXPECT_EQ(GeometricPmf(0.1, 1), 0.1);
  double sum = 0;
  for (std::uint64_t r = 1; r <= 200; ++r) sum += GeometricPmf(0.5, r);
  EXPECT_NEAR(sum, 1.0, 1e-12);
  for (std::uint64_t r = 1; r < 100; ++r) {
    EXPECT_GE(GeometricPmf(0.1, r), GeometricPmf(0.1, r + 1));
  }
  EXPECT_THROW(GeometricPmf(0, 1), InvalidArgumentError);
  EXPECT_THROW(GeometricPmf(1, 1), InvalidArgumentError);
  EXPECT_THROW(GeometricPmf(0.5, 0), InvalidArgumentError);
}

TEST(CumulativeTest, TuringTendsToOne) {
  for (double n1 : {1.0, 7.0, 300.0}) {
    EXPECT_NEAR(Cumulative(AsymptoteSpec::TuringLaw(n1), 1e6 * n1), 1.0,
                1e-15);
    EXPECT_EQ(Cumulative(AsymptoteSpec::TuringLaw(n1), 1), 0);
  }
}

TEST(CumulativeTest, ZipfIsLogarithmicAndUnbounded) {
  const auto spec = AsymptoteSpec::ZipfLaw(1, 0);
  for (double r : {2.0, 10.0, 1e6, 1e300}) {
    EXPECT_DOUBLE_EQ(Cumulative(spec, r), std::log(r));
  }
}

TEST(CumulativeTest, PowerLawMatchesQuadrature) {
  const auto spec = AsymptoteSpec::PowerLaw(1.5, 1);
  EXPECT_DOUBLE_EQ(Cumulative(spec, 2), 0.5);
  for (double r : {2.0, 10.0, 1234.5}) {
    EXPECT_NEAR(Cumulative(spec, r), 1 - 1 / r, 1e-15);
    EXPECT_NEAR(Cumulative(spec, r), Integrate(spec, 1, r), 1e-10);
  }
  // beta = 1 branch and a beta < 1 branch.
  for (double theta : {2.0, 3.0, 1.25}) {
    const auto s = AsymptoteSpec::PowerLaw(theta, 0.7);
    EXPECT_NEAR(Cumulative(s, 50), Integrate(s, 1, 50), 1e-10);
  }
}

TEST(CumulativeTest, ExponentialMatchesQuadrature) {
  const auto spec = AsymptoteSpec::ExponentialLaw(0.3, 0.2);
  EXPECT_NEAR(Cumulative(spec, 40), Integrate(spec, 1, 40), 1e-12);
}

TEST(DiscreteCumulativeTest, GeometricPartialSum) {
  // C e^{-lambda r} with C = p/(1-p), lambda = -ln(1-p) is the geometric pmf.
  const double p = 0.25;
  const auto spec = AsymptoteSpec::ExponentialLaw(p / (1 - p), -std::log1p(-p));
  EXPECT_NEAR(DiscreteCumulative(spec, 10), 1 - std::pow(1 - p, 10), 1e-14);
}

TEST(NormalizeTest, ProperDistributionsIntegrateToOne) {
  EXPECT_NEAR(Cumulative(Normalize(AsymptoteSpec::ExponentialLaw(5, 0.1)), 1e5),
              1.0, 1e-12);
  // The n1 and (C, lambda) parameterizations agree when lambda = 1/n1 and
  // C = e^{1/n1}/n1.
  const auto turing = AsymptoteSpec::TuringLaw(4);
  const auto expo = Normalize(AsymptoteSpec::ExponentialLaw(1, 0.25));
  for (double r : {1.0, 2.0, 9.5, 40.0}) {
    EXPECT_NEAR(FrequencyAt(turing, r), FrequencyAt(expo, r), 1e-15);
  }
  EXPECT_NEAR(Cumulative(Normalize(AsymptoteSpec::PowerLaw(1.5, 9)), 1e12),
              1.0, 1e-11);
}

TEST(NormalizeTest, DivergentLawsAreRejected) {
  EXPECT_THROW(Normalize(AsymptoteSpec::PowerLaw(2.0, 1)), InvalidArgumentError);
  EXPECT_THROW(Normalize(AsymptoteSpec::PowerLaw(3.0, 1)), InvalidArgumentError);
  EXPECT_THROW(Normalize(AsymptoteSpec::ZipfLaw(1, 0)), InvalidArgumentError);
}

TEST(ConvergesTest, Region) {
  EXPECT_TRUE(Converges(1));
  EXPECT_TRUE(Converges(1.5));
  EXPECT_TRUE(Converges(1.999));
  EXPECT_FALSE(Converges(2));
  EXPECT_FALSE(Converges(0.999));
  EXPECT_FALSE(Converges(2.5));
}

// The tail integral of r^{-beta}, beta = 1/(theta - 1), over [10^5, 10^6]
// is probed by quadrature for theta = 1.5.
TEST(ConvergesTest, ThetaOneAndAHalfHasBoundedTail) {
  const auto spec = AsymptoteSpec::PowerLaw(1.5, 1);
  double total = Integrate(spec, 1, 10);
  for (double lo = 10; lo < 1e5; lo *= 10) total += Integrate(spec, lo, 10 * lo);
  const double tail = Integrate(spec, 1e5, 1e6);
  EXPECT_LT(tail, 1e-4 * total);
}

// Decade increments d_k = integral_{10^k}^{10^{k+1}} f, by quadrature.
// Convergent iff they shrink geometrically, ratio d_{k+1}/d_k < 1.
TEST(ConvergesProperty, AgreesWithQuadratureTailRatio) {
  for (int i = 1; i <= 15; ++i) {
    const double theta = 1.0 + 0.1 * i;
    if (theta == 1.0) continue;
    const auto spec = AsymptoteSpec::PowerLaw(theta, 1);
    const double d5 = Integrate(spec, 1e5, 1e6);
    const double d6 = Integrate(spec, 1e6, 1e7);
    const bool geometric_decay = d6 / d5 < 1 - 1e-6;
    EXPECT_EQ(Converges(theta), geometric_decay) << "theta=" << theta;
  }
}

TEST(ConvergesProperty, ExponentialBranchHasBoundedTail) {
  const auto spec = AsymptoteSpec::TuringLaw(20);
  const double head = Integrate(spec, 1, 1e3);
  const double tail = Integrate(spec, 1e3, 1e4);
  EXPECT_NEAR(head, 1.0, 1e-12);
  EXPECT_LT(tail, 1e-15);
  EXPECT_TRUE(Converges(spec.theta()));
}

TEST(AsymptoteProperty, TuringNormalization) {
  for (double n1 : {1.0, 5.0, 50.0}) {
    const auto spec = AsymptoteSpec::TuringLaw(n1);
    EXPECT_NEAR(Integrate(spec, 1, 50 * n1), 1.0, 1e-6) << "n1=" << n1;
    EXPECT_EQ(FrequencyAt(spec, 1), 1 / n1);
  }
}

TEST(AsymptoteProperty, ZipfAndPowerParameterizationsAgree) {
  for (double a : {0.1, 1.0, 3.0}) {
    const auto zipf = AsymptoteSpec::ZipfLaw(a, 0);
    const auto power = AsymptoteSpec::PowerLaw(2.0, a);
    for (double r : {1.0, 2.0, 10.0, 100.0}) {
      EXPECT_NEAR(FrequencyAt(zipf, r), FrequencyAt(power, r),
                  1e-12 * FrequencyAt(zipf, r));
    }
  }
}

TEST(AsymptoteProperty, StrictlyDecreasing) {
  const std::vector<AsymptoteSpec> specs = {
      AsymptoteSpec::TuringLaw(3),          AsymptoteSpec::TuringLaw(500),
      AsymptoteSpec::ExponentialLaw(2, 0.01), AsymptoteSpec::PowerLaw(1.1, 1),
      AsymptoteSpec::PowerLaw(1.9, 2),      AsymptoteSpec::PowerLaw(4, 1),
      AsymptoteSpec::ZipfLaw(1, 0),         AsymptoteSpec::ZipfLaw(1, -0.9),
      AsymptoteSpec::ZipfLaw(1, 50)};
  for (const auto& spec : specs) {
    double prev = FrequencyAt(spec, 1);
    for (double r = 1.25; r <= 200; r += 0.25) {
      const double f = FrequencyAt(spec, r);
      ASSERT_LT(f, prev) << "theta=" << spec.theta() << " r=" << r;
      ASSERT_GT(f, 0);
      prev = f;
    }
  }
}

}  // namespace
}  // namespace freqlaw
