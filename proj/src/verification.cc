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

#include "freqlaw/verification.h"

#include <cmath>
#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

void AddRow(BoundReport& report, std::uint64_t x, double residual,
            double bound) {
  const bool pass = residual <= bound + report.epsilon;
  report.rows.push_back({x, residual, bound, bound - residual, pass});
  report.all_pass = report.all_pass && pass;
}

void CheckRange(std::uint64_t x_min, std::uint64_t x_max) {
  if (x_min < 2) throw InvalidArgumentError("x_min must be >= 2");
  if (x_min > x_max) throw InvalidArgumentError("x_min must not exceed x_max");
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    throw InvalidArgumentError("epsilon must be finite and >= 0");
  }
}

// x^-alpha - (x+1)^-alpha without cancellation.
double RankDifference(double x, double alpha) {
  return -std::pow(x, -alpha) * std::expm1(-alpha * std::log1p(1.0 / x));
}

}  // namespace

BoundReport TuringBoundCheck(std::uint64_t x_min, std::uint64_t x_max,
                             double epsilon) {
  CheckRange(x_min, x_max);
  CheckEpsilon(epsilon);
  BoundReport report;
  report.check = "turing-bound";
  report.theta = 1.0;
  report.epsilon = epsilon;
  report.rows.reserve(x_max - x_min + 1);
  for (std::uint64_t xi = x_min; xi <= x_max; ++xi) {
    const double x = static_cast<double>(xi);
    const double ratio = std::log1p(1.0 / (x + 1.0)) / std::log1p(1.0 / x);
    const double residual = std::fabs(ratio - x / (x + 1.0));
    AddRow(report, xi, residual, 1.0 / (x * x));
  }
  return report;
}

BoundReport GeneralBoundCheck(double theta, std::uint64_t x_min,
                              std::uint64_t x_max, double epsilon) {
  if (!(theta > 0) || !std::isfinite(theta)) {
    throw InvalidArgumentError("general bound requires theta > 0");
  }
  if (theta == 1.0) {
    throw InvalidArgumentError(
        "general bound excludes theta = 1; use the Turing bound check");
  }
  CheckRange(x_min, x_max);
  CheckEpsilon(epsilon);
  const double alpha = theta - 1.0;
  const double coefficient = std::fabs(alpha * alpha - 1.0);
  BoundReport report;
  report.check = "general-bound";
  report.theta = theta;
  report.epsilon = epsilon;
  report.rows.reserve(x_max - x_min + 1);
  for (std::uint64_t xi = x_min; xi <= x_max; ++xi) {
    const double x = static_cast<double>(xi);
    const double ratio =
        RankDifference(x + 1.0, alpha) / RankDifference(x, alpha);
    const double residual = std::fabs(x / (x + alpha + 1.0) - ratio);
    AddRow(report, xi, residual, coefficient / (x * x));
  }
  return report;
}

std::vector<ProductRatio> ProductApproxCheck(
    double theta, std::span<const std::uint64_t> x_values) {
  if (!(theta > 0) || !std::isfinite(theta)) {
    throw InvalidArgumentError("product check requires theta > 0");
  }
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    if (x_values[i] < 1 || (i > 0 && x_values[i] <= x_values[i - 1])) {
      throw InvalidArgumentError("x values must be positive and ascending");
    }
  }
  std::vector<ProductRatio> out;
  out.reserve(x_values.size());

  const double rounded = std::round(theta);
  if (rounded == theta && theta <= 64) {
    // prod_{k=1}^x k/(k+m) = m! / ((x+1)...(x+m)), so
    // ratio = prod_{j=1}^m j (x+1)/(x+j).
    const auto m = static_cast<std::uint64_t>(theta);
    for (std::uint64_t xi : x_values) {
      const double x = static_cast<double>(xi);
      double ratio = 1.0;
      for (std::uint64_t j = 1; j <= m; ++j) {
        const double jd = static_cast<double>(j);
        ratio *= jd * (x + 1.0) / (x + jd);
      }
      out.push_back({xi, ratio});
    }
    return out;
  }

  // log ratio = theta log(x+1) - sum_{k=1}^x log1p(theta/k)
  double sum = 0.0;
  double compensation = 0.0;
  std::uint64_t k = 0;
  for (std::uint64_t xi : x_values) {
    for (; k < xi; ++k) {
      const double term = std::log1p(theta / static_cast<double>(k + 1));
      const double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        compensation += (sum - t) + term;
      } else {
        compensation += (term - t) + sum;
      }
      sum = t;
    }
    const double log_ratio = theta * std::log1p(static_cast<double>(xi)) -
                             (sum + compensation);
    out.push_back({xi, std::exp(log_ratio)});
  }
  return out;
}

std::vector<IntegralValue> IntegralConvergenceProbe(
    double alpha, std::span<const double> upper) {
  if (!std::isfinite(alpha)) throw InvalidArgumentError("alpha must be finite");
  std::vector<IntegralValue> out;
  out.reserve(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const double r = upper[i];
    if (!(r > 1)) throw InvalidArgumentError("upper limits must exceed 1");
    if (i > 0 && r <= upper[i - 1]) {
      throw InvalidArgumentError("upper limits must be ascending");
    }
    const double value = alpha == -1.0
                             ? std::log(r)
                             : std::expm1((alpha + 1.0) * std::log(r)) /
                                   (alpha + 1.0);
    out.push_back({r, value});
  }
  return out;
}

std::vector<double> DecadeGrid(int decades) {
  if (decades < 1) throw InvalidArgumentError("need at least one decade");
  std::vector<double> grid;
  for (int k = 1; k <= decades; ++k) grid.push_back(std::pow(10.0, k));
  return grid;
}

bool ProbeIsBounded(std::span<const IntegralValue> values) {
  if (values.size() < 3) {
    throw InvalidArgumentError("boundedness needs at least three values");
  }
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double prev = values[i - 1].value - values[i - 2].value;
    const double next = values[i].value - values[i - 1].value;
    if (next == 0) continue;
    if (!std::isfinite(next) || prev == 0) return false;
    if (next / prev >= 1.0 - 1e-9) return false;
  }
  return true;
}

}  // namespace freqlaw
