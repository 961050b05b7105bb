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

#include "freqlaw/histogram.h"

#include <cmath>
#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {

void SpeciesCounts::Add(std::string_view species, std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("species count must be positive");
  auto it = index_.find(std::string(species));
  if (it == index_.end()) {
    index_.emplace(std::string(species), entries_.size());
    entries_.push_back({std::string(species), n});
  } else {
    entries_[it->second].count += n;
  }
  total_ += n;
}

std::uint64_t SpeciesCounts::Count(std::string_view species) const {
  auto it = index_.find(std::string(species));
  return it == index_.end() ? 0 : entries_[it->second].count;
}

bool SpeciesCounts::Contains(std::string_view species) const {
  return index_.count(std::string(species)) != 0;
}

std::optional<std::size_t> SpeciesCounts::AppearanceIndex(
    std::string_view species) const {
  auto it = index_.find(std::string(species));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SpeciesCounts SpeciesCounts::Filtered(std::uint64_t min_count) const {
  SpeciesCounts out;
  for (const auto& e : entries_) {
    if (e.count >= min_count) out.Add(e.species, e.count);
  }
  return out;
}

Theta::Theta(double value) : value_(value) {
  if (!std::isfinite(value)) throw InvalidArgumentError("theta must be finite");
}

void FrequencyHistogram::Set(std::uint64_t x, double n) {
  if (x == 0) throw InvalidArgumentError("frequency count x must be >= 1");
  if (!std::isfinite(n) || n < 0) {
    throw InvalidArgumentError("N_x must be finite and non-negative");
  }
  if (n == 0) {
    cells_.erase(x);
  } else {
    cells_[x] = n;
  }
}

double FrequencyHistogram::At(std::uint64_t x) const {
  auto it = cells_.find(x);
  return it == cells_.end() ? 0.0 : it->second;
}

std::uint64_t FrequencyHistogram::max_count() const {
  return cells_.empty() ? 0 : cells_.rbegin()->first;
}

FrequencyHistogram BuildHistogram(const SpeciesCounts& counts) {
  std::map<std::uint64_t, double> tally;
  for (const auto& e : counts.entries()) tally[e.count] += 1.0;
  FrequencyHistogram h;
  for (const auto& [x, n] : tally) h.Set(x, n);
  return h;
}

double RankOf(const FrequencyHistogram& histogram, std::uint64_t x) {
  if (x == 0) throw InvalidArgumentError("rank_of requires x >= 1");
  const auto& cells = histogram.cells();
  // Sum from the top down so that RankOf(x) - RankOf(x+1) reproduces N_x
  // exactly for integral tables.
  double rank = 0.0;
  for (auto it = cells.rbegin(); it != cells.rend() && it->first >= x; ++it) {
    rank += it->second;
  }
  return rank;
}

double TotalPopulation(const FrequencyHistogram& histogram) {
  double total = 0.0;
  for (const auto& [x, n] : histogram.cells()) {
    total += static_cast<double>(x) * n;
  }
  return total;
}

double Reestimate(const FrequencyHistogram& histogram, std::uint64_t x,
                  Theta theta) {
  if (x == 0) throw InvalidArgumentError("reestimate requires x >= 1");
  const double n_x = histogram.At(x);
  if (n_x <= 0) {
    throw DataError("reestimate undefined: N_" + std::to_string(x) +
                    " is empty");
  }
  return (static_cast<double>(x) + theta.value()) * histogram.At(x + 1) / n_x;
}

FrequencyHistogram IdealHistogram(Theta theta, double n1,
                                  std::uint64_t max_count) {
  if (theta.value() <= 0) {
    throw InvalidArgumentError("ideal histogram requires theta > 0");
  }
  if (!(n1 > 0) || !std::isfinite(n1)) {
    throw InvalidArgumentError("ideal histogram requires N_1 > 0");
  }
  if (max_count < 1) {
    throw InvalidArgumentError("ideal histogram requires X >= 1");
  }
  FrequencyHistogram h;
  double n = n1;
  h.Set(1, n);
  for (std::uint64_t x = 1; x < max_count; ++x) {
    const double xd = static_cast<double>(x);
    n = n * xd / (xd + theta.value());
    if (n == 0) break;  // underflow: the remaining cells are empty
    h.Set(x + 1, n);
  }
  return h;
}

}  // namespace freqlaw
