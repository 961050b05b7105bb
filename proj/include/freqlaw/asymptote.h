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

// Closed-form rank-frequency asymptotes of the theta family:
//
//   theta = 1    f(r) = (1/N_1) exp(-(r - 1)/N_1)   or   C exp(-lambda r)
//   theta != 1   f(r) = C r^(-1/(theta - 1))
//   Zipf         f(r) = A / (B + r)                (theta = 2 sub-case)
//
// Constants are stored as given; Normalize() fixes C where a proper
// distribution exists.

#ifndef FREQLAW_ASYMPTOTE_H_
#define FREQLAW_ASYMPTOTE_H_

#include <cstdint>
#include <variant>

namespace freqlaw {

class AsymptoteSpec {
 public:
  struct Turing {
    double n1;
  };
  struct Exponential {
    double scale;
    double rate;
  };
  struct Power {
    double theta;
    double scale;
  };
  struct Zipf {
    double a;
    double b;
  };
  using Law = std::variant<Turing, Exponential, Power, Zipf>;

  // f(r) = (1/n1) exp(-(r-1)/n1). n1 > 0.
  static AsymptoteSpec TuringLaw(double n1);
  // f(r) = scale * exp(-rate * r). scale, rate > 0. The Turing law is the
  // member with rate = 1/n1 and scale = exp(1/n1)/n1.
  static AsymptoteSpec ExponentialLaw(double scale, double rate);
  // f(r) = scale * r^(-1/(theta-1)). theta > 1, scale > 0.
  static AsymptoteSpec PowerLaw(double theta, double scale);
  // f(r) = a / (b + r). a > 0, b > -1.
  static AsymptoteSpec ZipfLaw(double a, double b);

  double theta() const;
  const Law& law() const { return law_; }

  bool is_exponential() const {
    return std::holds_alternative<Turing>(law_) ||
           std::holds_alternative<Exponential>(law_);
  }

 private:
  explicit AsymptoteSpec(Law law) : law_(law) {}
  Law law_;
};

// f(r), r >= 1.
double FrequencyAt(const AsymptoteSpec& spec, double r);

// Continuous cumulative F(r) = integral_1^r f, evaluated analytically.
double Cumulative(const AsymptoteSpec& spec, double r);

// Discrete cumulative sum_{k=1}^{r_max} f(k).
double DiscreteCumulative(const AsymptoteSpec& spec, std::uint64_t r_max);

// Rescales the law so that integral_1^inf f = 1. Throws InvalidArgumentError
// outside the convergence region (theta >= 2, any Zipf law).
AsymptoteSpec Normalize(const AsymptoteSpec& spec);

// beta = 1/(theta - 1) for theta > 1, and its inverse theta = 1 + 1/beta.
double BetaOfTheta(double theta);
double ThetaOfBeta(double beta);

// P(r) = p (1 - p)^(r - 1), 0 < p < 1, r >= 1.
double GeometricPmf(double p, std::uint64_t r);

// True iff the cumulative of f(r) converges as r -> inf, i.e. 1 <= theta < 2.
bool Converges(double theta);

}  // namespace freqlaw

#endif  // FREQLAW_ASYMPTOTE_H_
