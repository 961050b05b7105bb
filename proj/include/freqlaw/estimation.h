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

// Estimation from empirical data: theta fitting on rank-frequency series,
// Good-Turing smoothing with unseen-mass allocation, and geometric-tail
// smoothing over a tie-broken species ranking.

#ifndef FREQLAW_ESTIMATION_H_
#define FREQLAW_ESTIMATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freqlaw/histogram.h"

namespace freqlaw {

struct RankPoint {
  std::uint64_t rank;
  double frequency;
};

// (rank, relative frequency) pairs with ranks strictly increasing from 1 and
// frequencies positive and non-increasing.
class RankFrequencySeries {
 public:
  // Validates the invariants; throws InvalidArgumentError.
  explicit RankFrequencySeries(std::vector<RankPoint> points);

  // Ranks 1..n assigned in order.
  static RankFrequencySeries FromFrequencies(std::span<const double> f);

  const std::vector<RankPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<RankPoint> points_;
};

// Ordinary least squares y = intercept + slope * x.
struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

enum class FitModel { kExponential, kPower };
std::string_view FitModelName(FitModel model);

struct ThetaFit {
  FitModel model = FitModel::kPower;
  double theta_hat = 0;
  // Power model only: f ~ C r^-beta, theta = 1 + 1/beta.
  std::optional<double> beta_hat;
  // Exponential model only: f ~ C exp(-lambda r).
  std::optional<double> lambda_hat;
  // C of the chosen model, exp(intercept).
  double scale = 0;
  // R^2 of the chosen linearization.
  double goodness = 0;
  double goodness_power = 0;
  double goodness_exponential = 0;
  std::uint64_t tail_start = 1;
  std::size_t points_used = 0;
};

// First rank whose frequency drops below f(1)/10; the head before it is not
// in the asymptotic regime. Returns the last rank + 1 if none does.
std::uint64_t DefaultTailStart(const RankFrequencySeries& series);

// Regresses log f on log r (power) and on r (exponential) over ranks >=
// tail_start and keeps the model with higher R^2. Needs at least 10 tail
// points. A power fit with non-positive beta is a DataError.
ThetaFit FitTheta(const RankFrequencySeries& series,
                  std::optional<std::uint64_t> tail_start = std::nullopt);

struct RankingOptions {
  // Counts under a more general conditioning, used as the second key.
  const SpeciesCounts* backoff = nullptr;
  // Whether first-appearance order is used as the third key.
  bool use_appearance_order = true;
};

// Species ordered by: descending direct count, descending backoff count,
// ascending first appearance, ascending lexicographic id.
std::vector<std::string> BuildRanking(const SpeciesCounts& counts,
                                      const RankingOptions& options = {});

// Species sorted as by BuildRanking, f = count / N. Empty input is an error.
RankFrequencySeries RankSeriesFromCounts(const SpeciesCounts& counts);

enum class SmoothingMethod { kGoodTuring, kGeometricTail };
std::string_view SmoothingMethodName(SmoothingMethod method);

struct SpeciesProbability {
  std::string species;
  std::uint64_t count;
  double probability;
};

struct SmoothedDistribution {
  SmoothingMethod method = SmoothingMethod::kGoodTuring;
  // In ranking order.
  std::vector<SpeciesProbability> entries;
  double unseen_mass = 0;

  double Probability(std::string_view species) const;
  // unseen_mass + sum of per-species probabilities.
  double TotalMass() const;
};

// Fills interior gaps of the table by linear interpolation of log N_x
// against log x between the neighbouring non-empty cells. Cells below the
// smallest observed x are left empty.
FrequencyHistogram FillHistogramGaps(const FrequencyHistogram& histogram);

enum class SparseTailPolicy {
  // Absent N_{x+1} reads as zero.
  kRaw,
  // Gaps are filled first and the largest count keeps x* = X.
  kInterpolated,
};

struct ReestimateRow {
  std::uint64_t x;
  double n_x;
  double x_star;
};

// x* for every non-empty cell of the table.
std::vector<ReestimateRow> ReestimateTable(const FrequencyHistogram& histogram,
                                           Theta theta,
                                           SparseTailPolicy policy);

// Turing's formula with interpolated sparse tails. Unseen mass is N_1/N and
// seen weights x*/N are rescaled to 1 - N_1/N. Requires N_1 > 0 and at least
// one species seen more than once.
SmoothedDistribution GoodTuringSmooth(const SpeciesCounts& counts);

// The first head_size ranked species keep their relative frequencies. The
// remaining relative-frequency mass is spread over the tail species by
// geometric_pmf(p, r - head_size); the part of the geometric series beyond
// the last seen rank becomes the unseen mass.
SmoothedDistribution GeometricTailSmooth(const SpeciesCounts& counts,
                                         std::span<const std::string> ranking,
                                         double p, std::size_t head_size);

// p = 1/N_1, the intensity of the exponential Turing asymptote. Needs
// N_1 >= 2 so that p < 1.
double DefaultGeometricP(const SpeciesCounts& counts);

}  // namespace freqlaw

#endif  // FREQLAW_ESTIMATION_H_
