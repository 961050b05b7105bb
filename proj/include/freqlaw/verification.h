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

// Numerical checks of the analytic error bounds relating the rank-frequency
// asymptotes back to their local recurrences, of the product approximation
// x!/prod(k + theta) ~ C/(x+1)^theta, and of the integral convergence test.

#ifndef FREQLAW_VERIFICATION_H_
#define FREQLAW_VERIFICATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freqlaw {

struct BoundRow {
  std::uint64_t x;
  double residual;
  double bound;
  // bound - residual; negative values are violations.
  double margin;
  bool pass;
};

struct BoundReport {
  std::string check;
  double theta = 0;
  // Absolute slack allowed in residual <= bound + epsilon. Zero means the
  // comparison is exact.
  double epsilon = 0;
  std::vector<BoundRow> rows;
  bool all_pass = true;
};

// Default slack for the optional epsilon comparison.
inline constexpr double kDefaultBoundEpsilon = 1e-15;

// With N_x = ln(1 + 1/x): |N_{x+1}/N_x - x/(x+1)| <= 1/x^2 for
// 2 <= x_min <= x <= x_max.
BoundReport TuringBoundCheck(std::uint64_t x_min, std::uint64_t x_max,
                             double epsilon = 0);

// With r(x) = x^-(theta-1), N_x = r(x) - r(x+1), alpha = theta - 1:
// |x/(x+alpha+1) - N_{x+1}/N_x| <= |alpha^2 - 1| / x^2.
// Requires theta > 0, theta != 1, 2 <= x_min <= x_max.
BoundReport GeneralBoundCheck(double theta, std::uint64_t x_min,
                              std::uint64_t x_max, double epsilon = 0);

struct ProductRatio {
  std::uint64_t x;
  double ratio;
};

// ratio(x) = (x+1)^theta * prod_{k=1}^x k/(k+theta). x_values must be
// positive and ascending. Integer theta uses the telescoped finite product;
// other values accumulate log1p terms with compensated summation.
std::vector<ProductRatio> ProductApproxCheck(
    double theta, std::span<const std::uint64_t> x_values);

struct IntegralValue {
  double upper;
  double value;
};

// integral_1^R x^alpha dx for each R > 1, evaluated analytically.
std::vector<IntegralValue> IntegralConvergenceProbe(
    double alpha, std::span<const double> upper);

// Upper limits 10^1 .. 10^decades.
std::vector<double> DecadeGrid(int decades);

// Classifies a probe sequence taken on a geometric grid: bounded iff the
// increments shrink geometrically (every ratio of successive increments is
// below 1 - 1e-9). Needs at least three values.
bool ProbeIsBounded(std::span<const IntegralValue> values);

}  // namespace freqlaw

#endif  // FREQLAW_VERIFICATION_H_
