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

// Finite populations drawn from the asymptotic laws, and empirical checks of
// how well local reestimation recovers the counts of a sample.

#ifndef FREQLAW_SIMULATION_H_
#define FREQLAW_SIMULATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "freqlaw/asymptote.h"
#include "freqlaw/histogram.h"

namespace freqlaw {

// Walker/Vose alias table: O(n) construction, O(1) draws.
class AliasTable {
 public:
  // Weights must be non-negative with a positive finite sum.
  explicit AliasTable(std::span<const double> weights);

  std::size_t Sample(std::mt19937_64& rng) const;
  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

// A law truncated to ranks 1..species and renormalized.
class PopulationModel {
 public:
  PopulationModel(AsymptoteSpec spec, std::uint64_t species,
                  std::uint64_t seed);

  // Truncated geometric population P(r) ~ p (1-p)^(r-1).
  static PopulationModel Geometric(double p, std::uint64_t species,
                                   std::uint64_t seed);

  const AsymptoteSpec& spec() const { return spec_; }
  std::uint64_t species() const { return species_; }
  std::uint64_t seed() const { return seed_; }
  // Sums to 1.
  const std::vector<double>& probabilities() const { return probabilities_; }

  PopulationModel WithSeed(std::uint64_t seed) const;

 private:
  AsymptoteSpec spec_;
  std::uint64_t species_;
  std::uint64_t seed_;
  std::vector<double> probabilities_;
};

// Seed of replicate `index` derived from a base seed; index 0 is the base.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

// n_tokens i.i.d. draws. Species are named "s<rank>" and listed in order of
// first draw. Deterministic in the model seed.
SpeciesCounts SampleTokens(const PopulationModel& model,
                           std::uint64_t n_tokens);

struct ReestimationRow {
  std::uint64_t x;
  double mean_n_x;
  // Replicates in which N_x > 0; the remaining ones are gaps.
  std::size_t samples;
  std::optional<double> mean_x_star;
  // Mean over replicates of |x* - x| / x.
  std::optional<double> mean_relative_error;
  // |mean x* - x| / x.
  std::optional<double> relative_error_of_mean;
};

struct ReestimationReport {
  double theta = 1;
  std::size_t replicates = 0;
  std::vector<ReestimationRow> rows;
};

struct ReestimationOptions {
  std::size_t replicates = 1;
  // Without x_max, rows run up to the largest x whose mean N_x is at least
  // min_species; beyond that x* is dominated by sampling noise.
  double min_species = 30;
  std::optional<std::uint64_t> x_max;
};

// Applies x* = (x + theta) N_{x+1}/N_x to each histogram and aggregates.
ReestimationReport ReestimationReportFromHistograms(
    std::span<const FrequencyHistogram> histograms, Theta theta,
    const ReestimationOptions& options = {});

// Samples options.replicates populations with seeds DeriveSeed(seed, i).
ReestimationReport EmpiricalReestimationReport(
    const PopulationModel& model, std::uint64_t n_tokens, Theta theta,
    const ReestimationOptions& options = {});

}  // namespace freqlaw

#endif  // FREQLAW_SIMULATION_H_
