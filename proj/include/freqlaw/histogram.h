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

// Frequency-of-frequencies tables and the exact discrete identities that
// tie them to ranks and to the theta family of local reestimation rules
// x* = (x + theta) * N_{x+1} / N_x.

#ifndef FREQLAW_HISTOGRAM_H_
#define FREQLAW_HISTOGRAM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace freqlaw {

// Raw sample: species id -> occurrence count, remembering the order in
// which species were first seen.
class SpeciesCounts {
 public:
  struct Entry {
    std::string species;
    std::uint64_t count;
  };

  SpeciesCounts() = default;

  // Adds `n` occurrences of `species`. New species are appended to the
  // appearance order. `n` must be positive.
  void Add(std::string_view species, std::uint64_t n = 1);

  // Occurrence count, 0 when the species was never seen.
  std::uint64_t Count(std::string_view species) const;
  bool Contains(std::string_view species) const;

  // Position of the species in first-appearance order.
  std::optional<std::size_t> AppearanceIndex(std::string_view species) const;

  // Keeps only species with count >= min_count, preserving order.
  SpeciesCounts Filtered(std::uint64_t min_count) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Token total, sum of all counts.
  std::uint64_t total() const { return total_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t total_ = 0;
};

// Local reestimation parameter. theta = 1 is Turing's formula, theta = 2 the
// rule implied by Zipf's law.
class Theta {
 public:
  explicit Theta(double value);

  double value() const { return value_; }
  // Shift used by the error bounds, theta - 1.
  double alpha() const { return value_ - 1.0; }

 private:
  double value_;
};

// N_x for x = 1..X. Values are real so that ideal analytic populations with
// non-integer cells can be represented; cells with N_x = 0 are not stored.
class FrequencyHistogram {
 public:
  FrequencyHistogram() = default;

  // Sets N_x. x >= 1, n >= 0 and finite; n == 0 removes the cell.
  void Set(std::uint64_t x, double n);

  // N_x, 0 for absent cells.
  double At(std::uint64_t x) const;
  bool Has(std::uint64_t x) const { return cells_.count(x) != 0; }

  // Largest x with N_x > 0; 0 when empty.
  std::uint64_t max_count() const;
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  const std::map<std::uint64_t, double>& cells() const { return cells_; }

  friend bool operator==(const FrequencyHistogram&,
                         const FrequencyHistogram&) = default;

 private:
  std::map<std::uint64_t, double> cells_;
};

// N_x = number of species observed exactly x times.
FrequencyHistogram BuildHistogram(const SpeciesCounts& counts);

// r(x) = sum_{k >= x} N_k, the rank of the last species with count x.
// Zero for x beyond the largest count.
double RankOf(const FrequencyHistogram& histogram, std::uint64_t x);

// N = sum_x x * N_x.
double TotalPopulation(const FrequencyHistogram& histogram);

// x* = (x + theta) * N_{x+1} / N_x, reading an absent N_{x+1} as zero.
// Throws DataError when N_x is absent: smooth the table first.
double Reestimate(const FrequencyHistogram& histogram, std::uint64_t x,
                  Theta theta);

// Population that is a fixed point of the theta rule:
// N_1 = n1, N_{x+1} = N_x * x / (x + theta) for x < max_count.
// Requires theta > 0, n1 > 0 and max_count >= 1.
FrequencyHistogram IdealHistogram(Theta theta, double n1,
                                  std::uint64_t max_count);

}  // namespace freqlaw

#endif  // FREQLAW_HISTOGRAM_H_
