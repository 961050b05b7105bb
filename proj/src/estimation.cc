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

#include "freqlaw/estimation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "freqlaw/asymptote.h"
#include "freqlaw/errors.h"

namespace freqlaw {

RankFrequencySeries::RankFrequencySeries(std::vector<RankPoint> points)
    : points_(std::move(points)) {
  double sum = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const RankPoint& p = points_[i];
    if (i == 0 && p.rank != 1) {
      throw InvalidArgumentError("rank-frequency series must start at rank 1");
    }
    if (i > 0 && p.rank <= points_[i - 1].rank) {
      throw InvalidArgumentError("ranks must be strictly increasing");
    }
    if (!(p.frequency > 0) || !std::isfinite(p.frequency)) {
      throw InvalidArgumentError("relative frequencies must be positive");
    }
    if (i > 0 && p.frequency > points_[i - 1].frequency) {
      throw InvalidArgumentError("relative frequencies must be non-increasing");
    }
    sum += p.frequency;
  }
  if (sum > 1.0 + 1e-9) {
    throw InvalidArgumentError("relative frequencies sum to more than 1");
  }
}

RankFrequencySeries RankFrequencySeries::FromFrequencies(
    std::span<const double> f) {
  std::vector<RankPoint> points;
  points.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) points.push_back({i + 1, f[i]});
  return RankFrequencySeries(std::move(points));
}

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgumentError("line fit needs two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw InvalidArgumentError("line fit needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += e * e;
  }
  fit.r_squared = syy > 0 ? std::max(0.0, 1.0 - sse / syy) : 1.0;
  return fit;
}

std::string_view FitModelName(FitModel model) {
  return model == FitModel::kPower ? "power" : "exponential";
}

std::uint64_t DefaultTailStart(const RankFrequencySeries& series) {
  const auto& pts = series.points();
  if (pts.empty()) return 1;
  const double threshold = pts.front().frequency / 10.0;
  for (const RankPoint& p : pts) {
    if (p.frequency < threshold) return p.rank;
  }
  return pts.back().rank + 1;
}

ThetaFit FitTheta(const RankFrequencySeries& series,
                  std::optional<std::uint64_t> tail_start) {
  const std::uint64_t start = tail_start.value_or(DefaultTailStart(series));
  if (start < 1) throw InvalidArgumentError("tail start must be >= 1");

  std::vector<double> rank, log_rank, log_f;
  for (const RankPoint& p : series.points()) {
    if (p.rank < start) continue;
    rank.push_back(static_cast<double>(p.rank));
    log_rank.push_back(std::log(static_cast<double>(p.rank)));
    log_f.push_back(std::log(p.frequency));
  }
  if (rank.size() < 10) {
    throw DataError("theta fit needs at least 10 points at rank >= " +
                    std::to_string(start) + ", have " +
                    std::to_string(rank.size()));
  }

  const LinearFit power = FitLine(log_rank, log_f);
  const LinearFit expo = FitLine(rank, log_f);

  ThetaFit fit;
  fit.goodness_power = power.r_squared;
  fit.goodness_exponential = expo.r_squared;
  fit.tail_start = start;
  fit.points_used = rank.size();
  if (expo.r_squared > power.r_squared) {
    fit.model = FitModel::kExponential;
    fit.theta_hat = 1.0;
    fit.lambda_hat = -expo.slope;
    fit.scale = std::exp(expo.intercept);
    fit.goodness = expo.r_squared;
  } else {
    const double beta = -power.slope;
    if (!(beta > 0)) {
      throw DataError("power fit failed: estimated beta = " +
                      std::to_string(beta) + " is not positive");
    }
    fit.model = FitModel::kPower;
    fit.beta_hat = beta;
    fit.theta_hat = ThetaOfBeta(beta);
    fit.scale = std::exp(power.intercept);
    fit.goodness = power.r_squared;
  }
  return fit;
}

std::vector<std::string> BuildRanking(const SpeciesCounts& counts,
                                      const RankingOptions& options) {
  struct Key {
    std::uint64_t count;
    std::uint64_t backoff;
    std::size_t appearance;
    const std::string* species;
  };
  std::vector<Key> keys;
  keys.reserve(counts.size());
  const auto& entries = counts.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    keys.push_back({entries[i].count,
                    options.backoff ? options.backoff->Count(entries[i].species)
                                    : 0,
                    options.use_appearance_order ? i : 0,
                    &entries[i].species});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.backoff != b.backoff) return a.backoff > b.backoff;
    if (a.appearance != b.appearance) return a.appearance < b.appearance;
    return *a.species < *b.species;
  });
  std::vector<std::string> ranking;
  ranking.reserve(keys.size());
  for (const Key& k : keys) ranking.push_back(*k.species);
  return ranking;
}

RankFrequencySeries RankSeriesFromCounts(const SpeciesCounts& counts) {
  if (counts.empty()) {
    throw DataError("rank-frequency series needs at least one species");
  }
  const double total = static_cast<double>(counts.total());
  std::vector<RankPoint> points;
  points.reserve(counts.size());
  std::uint64_t rank = 1;
  for (const std::string& s : BuildRanking(counts)) {
    points.push_back({rank++, static_cast<double>(counts.Count(s)) / total});
  }
  return RankFrequencySeries(std::move(points));
}

std::string_view SmoothingMethodName(SmoothingMethod method) {
  return method == SmoothingMethod::kGoodTuring ? "good_turing"
                                                : "geometric_tail";
}

double SmoothedDistribution::Probability(std::string_view species) const {
  for (const auto& e : entries) {
    if (e.species == species) return e.probability;
  }
  return 0.0;
}

double SmoothedDistribution::TotalMass() const {
  double total = unseen_mass;
  for (const auto& e : entries) total += e.probability;
  return total;
}

FrequencyHistogram FillHistogramGaps(const FrequencyHistogram& histogram) {
  FrequencyHistogram filled = histogram;
  const auto& cells = histogram.cells();
  for (auto hi = cells.begin(), lo = hi; hi != cells.end(); lo = hi++) {
    if (hi == lo || hi->first == lo->first + 1) continue;
    const double lx0 = std::log(static_cast<double>(lo->first));
    const double lx1 = std::log(static_cast<double>(hi->first));
    const double ly0 = std::log(lo->second);
    const double ly1 = std::log(hi->second);
    for (std::uint64_t x = lo->first + 1; x < hi->first; ++x) {
      const double t = (std::log(static_cast<double>(x)) - lx0) / (lx1 - lx0);
      filled.Set(x, std::exp(ly0 + t * (ly1 - ly0)));
    }
  }
  return filled;
}

std::vector<ReestimateRow> ReestimateTable(const FrequencyHistogram& histogram,
                                           Theta theta,
                                           SparseTailPolicy policy) {
  std::vector<ReestimateRow> rows;
  rows.reserve(histogram.size());
  if (policy == SparseTailPolicy::kRaw) {
    for (const auto& [x, n] : histogram.cells()) {
      rows.push_back({x, n, Reestimate(histogram, x, theta)});
    }
    return rows;
  }
  const FrequencyHistogram filled = FillHistogramGaps(histogram);
  const std::uint64_t top = histogram.max_count();
  for (const auto& [x, n] : histogram.cells()) {
    const double x_star = x == top ? static_cast<double>(x)
                                   : Reestimate(filled, x, theta);
    rows.push_back({x, n, x_star});
  }
  return rows;
}

SmoothedDistribution GoodTuringSmooth(const SpeciesCounts& counts) {
  if (counts.empty()) throw DataError("Good-Turing smoothing needs data");
  const FrequencyHistogram h = BuildHistogram(counts);
  const double n1 = h.At(1);
  if (n1 == 0) {
    throw DataError("Good-Turing smoothing needs singletons (N_1 = 0)");
  }
  if (h.max_count() == 1) {
    throw DataError(
        "Good-Turing smoothing needs a species seen more than once; with "
        "only singletons all mass would be unseen");
  }
  const double total = static_cast<double>(counts.total());

  std::unordered_map<std::uint64_t, double> x_star;
  for (const ReestimateRow& row :
       ReestimateTable(h, Theta(1.0), SparseTailPolicy::kInterpolated)) {
    x_star[row.x] = row.x_star;
  }

  SmoothedDistribution out;
  out.method = SmoothingMethod::kGoodTuring;
  out.unseen_mass = n1 / total;
  double seen = 0.0;
  for (const std::string& s : BuildRanking(counts)) {
    const std::uint64_t c = counts.Count(s);
    const double w = x_star.at(c) / total;
    out.entries.push_back({s, c, w});
    seen += w;
  }
  const double scale = (1.0 - out.unseen_mass) / seen;
  for (auto& e : out.entries) e.probability *= scale;
  return out;
}

SmoothedDistribution GeometricTailSmooth(const SpeciesCounts& counts,
                                         std::span<const std::string> ranking,
                                         double p, std::size_t head_size) {
  if (!(p > 0 && p < 1)) throw InvalidArgumentError("p must lie in (0, 1)");
  if (counts.empty()) throw DataError("geometric-tail smoothing needs data");
  if (ranking.size() != counts.size()) {
    throw InvalidArgumentError("ranking does not cover the species exactly");
  }
  {
    std::unordered_set<std::string_view> seen;
    for (const std::string& s : ranking) {
      if (!counts.Contains(s) || !seen.insert(s).second) {
        throw InvalidArgumentError("ranking does not cover the species "
                                   "exactly: bad entry '" + s + "'");
      }
    }
  }
  if (head_size > ranking.size()) {
    throw InvalidArgumentError("head size exceeds the number of species");
  }

  const double total = static_cast<double>(counts.total());
  std::uint64_t tail_tokens = 0;
  for (std::size_t i = head_size; i < ranking.size(); ++i) {
    tail_tokens += counts.Count(ranking[i]);
  }
  const double tail_mass = static_cast<double>(tail_tokens) / total;

  SmoothedDistribution out;
  out.method = SmoothingMethod::kGeometricTail;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const std::uint64_t c = counts.Count(ranking[i]);
    double prob;
    if (i < head_size) {
      prob = static_cast<double>(c) / total;
    } else {
      prob = tail_mass * GeometricPmf(p, i - head_size + 1);
      if (prob == 0) {
        throw DataError("geometric tail underflows at rank " +
                        std::to_string(i + 1) + "; use a smaller p");
      }
    }
    out.entries.push_back({ranking[i], c, prob});
  }
  const double tail_size = static_cast<double>(ranking.size() - head_size);
  out.unseen_mass = tail_mass * std::pow(1.0 - p, tail_size);
  return out;
}

double DefaultGeometricP(const SpeciesCounts& counts) {
  const double n1 = BuildHistogram(counts).At(1);
  if (n1 < 2) {
    throw DataError("default p = 1/N_1 needs N_1 >= 2; pass p explicitly");
  }
  return 1.0 / n1;
}

}  // namespace freqlaw
