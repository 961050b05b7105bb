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

// CSV, TSV and JSON serialization of reports. Every document carries a
// schema tag: a "# schema: ..." first line in CSV/TSV, a "schema" key in JSON.
// Numbers are written in shortest round-trip form and JSON keys are sorted,
// so output is byte-stable.

#ifndef FREQLAW_REPORT_IO_H_
#define FREQLAW_REPORT_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "freqlaw/estimation.h"
#include "freqlaw/histogram.h"
#include "freqlaw/simulation.h"
#include "freqlaw/verification.h"

namespace freqlaw {

inline constexpr std::string_view kCountsSchema = "freqlaw.counts/1";
inline constexpr std::string_view kBoundReportSchema = "freqlaw.bound-report/1";
inline constexpr std::string_view kProductSchema = "freqlaw.product-check/1";
inline constexpr std::string_view kIntegralSchema = "freqlaw.integral-probe/1";
inline constexpr std::string_view kFitSchema = "freqlaw.fit/1";
inline constexpr std::string_view kSmoothSchema = "freqlaw.smooth/1";
inline constexpr std::string_view kReestimationSchema =
    "freqlaw.reestimation-report/1";

// Shortest decimal that round-trips; "nan", "inf", "-inf" otherwise.
std::string FormatDouble(double v);

// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
std::string CsvField(std::string_view field);

void WriteSchemaLine(std::ostream& out, std::string_view schema);

// species<TAB>count lines under a schema comment.
void WriteCountsTsv(std::ostream& out, const SpeciesCounts& counts);
// Accepts the format above; blank lines and "# " comment lines are skipped.
SpeciesCounts ParseCountsTsv(std::string_view text);

void WriteBoundReportCsv(std::ostream& out, const BoundReport& report);
nlohmann::json BoundReportJson(const BoundReport& report);

void WriteProductCsv(std::ostream& out, double theta,
                     std::span<const ProductRatio> ratios);
void WriteIntegralCsv(std::ostream& out, double alpha,
                      std::span<const IntegralValue> values, bool bounded);

nlohmann::json ThetaFitJson(const ThetaFit& fit);

void WriteSmoothedCsv(std::ostream& out, const SmoothedDistribution& dist);
nlohmann::json SmoothedJson(const SmoothedDistribution& dist);

void WriteReestimationCsv(std::ostream& out, const ReestimationReport& report);
nlohmann::json ReestimationJson(const ReestimationReport& report);

}  // namespace freqlaw

#endif  // FREQLAW_REPORT_IO_H_
