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
#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequirePositive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw InvalidArgumentError(std::string(what) + " must be positive");
  }
}

void RequireRank(double r) {
  if (!(r >= 1)) throw InvalidArgumentError("rank must be >= 1");
}

}  // namespace

AsymptoteSpec AsymptoteSpec::TuringLaw(double n1) {
  RequirePositive(n1, "N_1");
  return AsymptoteSpec(Turing{n1});
}

AsymptoteSpec AsymptoteSpec::ExponentialLaw(double scale, double rate) {
  RequirePositive(scale, "scale");
  RequirePositive(rate, "rate");
  return AsymptoteSpec(Exponential{scale, rate});
}

AsymptoteSpec AsymptoteSpec::PowerLaw(double theta, double scale) {
  if (!(theta > 1) || !std::isfinite(theta)) {
    throw InvalidArgumentError(
        "power law requires theta > 1 (theta = 1 is the exponential law)");
  }
  RequirePositive(scale, "scale");
  return AsymptoteSpec(Power{theta, scale});
}

AsymptoteSpec AsymptoteSpec::ZipfLaw(double a, double b) {
  RequirePositive(a, "Zipf A");
  if (!(b > -1) || !std::isfinite(b)) {
    throw InvalidArgumentError("Zipf B must be > -1");
  }
  return AsymptoteSpec(Zipf{a, b});
}

double AsymptoteSpec::theta() const {
  return std::visit(Overloaded{
                        [](const Turing&) { return 1.0; },
                        [](const Exponential&) { return 1.0; },
                        [](const Power& p) { return p.theta; },
                        [](const Zipf&) { return 2.0; },
                    },
                    law_);
}

double FrequencyAt(const AsymptoteSpec& spec, double r) {
  RequireRank(r);
  return std::visit(
      Overloaded{
          [r](const AsymptoteSpec::Turing& t) {
            return (1.0 / t.n1) * std::exp(-(r - 1.0) / t.n1);
          },
          [r](const AsymptoteSpec::Exponential& e) {
            return e.scale * std::exp(-e.rate * r);
          },
          [r](const AsymptoteSpec::Power& p) {
            return p.scale * std::pow(r, -BetaOfTheta(p.theta));
          },
          [r](const AsymptoteSpec::Zipf& z) { return z.a / (z.b + r); },
      },
      spec.law());
}

double Cumulative(const AsymptoteSpec& spec, double r) {
  RequireRank(r);
  return std::visit(
      Overloaded{
          [r](const AsymptoteSpec::Turing& t) {
            return -std::expm1(-(r - 1.0) / t.n1);
          },
          [r](const AsymptoteSpec::Exponential& e) {
            // (C/lambda)(e^{-lambda} - e^{-lambda r})
            return -(e.scale / e.rate) * std::exp(-e.rate) *
                   std::expm1(-e.rate * (r - 1.0));
          },
          [r](const AsymptoteSpec::Power& p) {
            const double beta = BetaOfTheta(p.theta);
            if (beta == 1.0) return p.scale * std::log(r);
            const double k = 1.0 - beta;
            return p.scale * std::expm1(k * std::log(r)) / k;
          },
          [r](const AsymptoteSpec::Zipf& z) {
            return z.a * (std::log(z.b + r) - std::log(z.b + 1.0));
          },
      },
      spec.law());
}

double DiscreteCumulative(const AsymptoteSpec& spec, std::uint64_t r_max) {
  double sum = 0.0;
  double compensation = 0.0;
  for (std::uint64_t k = 1; k <= r_max; ++k) {
    const double y = FrequencyAt(spec, static_cast<double>(k)) - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  return sum;
}

AsymptoteSpec Normalize(const AsymptoteSpec& spec) {
  return std::visit(
      Overloaded{
          [&spec](const AsymptoteSpec::Turing&) { return spec; },
          [](const AsymptoteSpec::Exponential& e) {
            return AsymptoteSpec::ExponentialLaw(e.rate * std::exp(e.rate),
                                                 e.rate);
          },
          [](const AsymptoteSpec::Power& p) {
            if (!Converges(p.theta)) {
              throw InvalidArgumentError(
                  "cannot normalize: cumulative diverges for theta >= 2");
            }
            return AsymptoteSpec::PowerLaw(p.theta, BetaOfTheta(p.theta) - 1.0);
          },
          [](const AsymptoteSpec::Zipf&) -> AsymptoteSpec {
            throw InvalidArgumentError(
                "cannot normalize: Zipf cumulative diverges");
          },
      },
      spec.law());
}

double BetaOfTheta(double theta) {
  if (!(theta > 1) || !std::isfinite(theta)) {
    throw InvalidArgumentError("beta = 1/(theta-1) requires theta > 1");
  }
  return 1.0 / (theta - 1.0);
}

double ThetaOfBeta(double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("theta = 1 + 1/beta requires beta > 0");
  }
  return 1.0 + 1.0 / beta;
}

double GeometricPmf(double p, std::uint64_t r) {
  if (!(p > 0 && p < 1)) throw InvalidArgumentError("p must lie in (0, 1)");
  if (r < 1) throw InvalidArgumentError("geometric pmf requires r >= 1");
  return p * std::pow(1.0 - p, static_cast<double>(r - 1));
}

bool Converges(double theta) { return theta >= 1.0 && theta < 2.0; }

}  // namespace freqlaw
