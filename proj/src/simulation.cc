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

#include "freqlaw/simulation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

double UnitInterval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t BoundedIndex(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw InvalidArgumentError("alias table needs weights");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw InvalidArgumentError("alias weights must be finite and >= 0");
    }
    sum += w;
  }
  if (!(sum > 0) || !std::isfinite(sum)) {
    throw InvalidArgumentError("alias weights must have a positive sum");
  }

  prob_.assign(n, 1.0);
  alias_.resize(n);
  std::iota(alias_.begin(), alias_.end(), std::size_t{0});
  std::vector<double> scaled(n);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / sum;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (std::size_t i : small) prob_[i] = 1.0;
  for (std::size_t i : large) prob_[i] = 1.0;
}

std::size_t AliasTable::Sample(std::mt19937_64& rng) const {
  const std::size_t column = BoundedIndex(rng, prob_.size());
  return UnitInterval(rng) < prob_[column] ? column : alias_[column];
}

PopulationModel::PopulationModel(AsymptoteSpec spec, std::uint64_t species,
                                 std::uint64_t seed)
    : spec_(spec), species_(species), seed_(seed) {
  if (species < 1) throw InvalidArgumentError("population needs species >= 1");
  probabilities_.resize(species);
  double sum = 0.0;
  for (std::uint64_t r = 1; r <= species; ++r) {
    probabilities_[r - 1] = FrequencyAt(spec_, static_cast<double>(r));
    sum += probabilities_[r - 1];
  }
  if (!(sum > 0) || !std::isfinite(sum)) {
    throw InvalidArgumentError("population probabilities do not normalize");
  }
  for (double& p : probabilities_) p /= sum;
}

PopulationModel PopulationModel::Geometric(double p, std::uint64_t species,
                                           std::uint64_t seed) {
  if (!(p > 0 && p < 1)) throw InvalidArgumentError("p must lie in (0, 1)");
  // p (1-p)^(r-1) = (p / (1-p)) exp(r log(1-p))
  return PopulationModel(
      AsymptoteSpec::ExponentialLaw(p / (1.0 - p), -std::log1p(-p)), species,
      seed);
}

PopulationModel PopulationModel::WithSeed(std::uint64_t seed) const {
  PopulationModel copy = *this;
  copy.seed_ = seed;
  return copy;
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  if (index == 0) return base;
  // SplitMix64 finalizer over (base, index).
  std::uint64_t z = base + index * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SpeciesCounts SampleTokens(const PopulationModel& model,
                           std::uint64_t n_tokens) {
  if (n_tokens < 1) throw InvalidArgumentError("need at least one token");
  const AliasTable table(model.probabilities());
  std::mt19937_64 rng(model.seed());
  std::vector<std::uint64_t> tally(model.species(), 0);
  std::vector<std::size_t> order;
  for (std::uint64_t i = 0; i < n_tokens; ++i) {
    const std::size_t r = table.Sample(rng);
    if (tally[r]++ == 0) order.push_back(r);
  }
  SpeciesCounts counts;
  for (std::size_t r : order) counts.Add("s" + std::to_string(r + 1), tally[r]);
  return counts;
}

ReestimationReport ReestimationReportFromHistograms(
    std::span<const FrequencyHistogram> histograms, Theta theta,
    const ReestimationOptions& options) {
  if (histograms.empty()) {
    throw InvalidArgumentError("reestimation report needs a histogram");
  }
  const double reps = static_cast<double>(histograms.size());
  auto mean_n = [&](std::uint64_t x) {
    double s = 0;
    for (const auto& h : histograms) s += h.At(x);
    return s / reps;
  };

  std::uint64_t x_max = 0;
  if (options.x_max) {
    x_max = *options.x_max;
  } else {
    std::uint64_t top = 0;
    for (const auto& h : histograms) top = std::max(top, h.max_count());
    for (std::uint64_t x = 1; x <= top; ++x) {
      if (mean_n(x) >= options.min_species) x_max = x;
    }
  }

  ReestimationReport report;
  report.theta = theta.value();
  report.replicates = histograms.size();
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    ReestimationRow row{x, mean_n(x), 0, {}, {}, {}};
    const double xd = static_cast<double>(x);
    double sum_star = 0, sum_err = 0;
    for (const auto& h : histograms) {
      if (!h.Has(x)) continue;
      const double x_star = Reestimate(h, x, theta);
      sum_star += x_star;
      sum_err += std::fabs(x_star - xd) / xd;
      ++row.samples;
    }
    if (row.samples > 0) {
      const double n = static_cast<double>(row.samples);
      row.mean_x_star = sum_star / n;
      row.mean_relative_error = sum_err / n;
      row.relative_error_of_mean = std::fabs(sum_star / n - xd) / xd;
    }
    report.rows.push_back(row);
  }
  return report;
}

ReestimationReport EmpiricalReestimationReport(
    const PopulationModel& model, std::uint64_t n_tokens, Theta theta,
    const ReestimationOptions& options) {
  if (options.replicates < 1) {
    throw InvalidArgumentError("need at least one replicate");
  }
  std::vector<FrequencyHistogram> histograms;
  histograms.reserve(options.replicates);
  for (std::size_t i = 0; i < options.replicates; ++i) {
    const PopulationModel replicate =
        model.WithSeed(DeriveSeed(model.seed(), i));
    histograms.push_back(BuildHistogram(SampleTokens(replicate, n_tokens)));
  }
  return ReestimationReportFromHistograms(histograms, theta, options);
}

}  // namespace freqlaw
