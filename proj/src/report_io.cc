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

#include "freqlaw/report_io.h"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

const char* Bool(bool b) { return b ? "true" : "false"; }

nlohmann::json Optional(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

nlohmann::json Number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string OptionalField(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteSchemaLine(std::ostream& out, std::string_view schema) {
  out << "# schema: " << schema << '\n';
}

void WriteCountsTsv(std::ostream& out, const SpeciesCounts& counts) {
  WriteSchemaLine(out, kCountsSchema);
  for (const auto& e : counts.entries()) {
    out << e.species << '\t' << e.count << '\n';
  }
}

SpeciesCounts ParseCountsTsv(std::string_view text) {
  SpeciesCounts counts;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // Comments are "#" alone or "# ..."; tokens never contain spaces, so a
    // species such as "#tag" is still read as data.
    if (line.empty() || line == "#" || line.starts_with("# ")) continue;
    const std::size_t tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw DataError("counts line " + std::to_string(line_no) +
                      ": expected species<TAB>count");
    }
    const std::string_view number = line.substr(tab + 1);
    std::uint64_t count = 0;
    auto res =
        std::from_chars(number.data(), number.data() + number.size(), count);
    if (res.ec != std::errc() || res.ptr != number.data() + number.size() ||
        count == 0) {
      throw DataError("counts line " + std::to_string(line_no) +
                      ": count must be a positive integer");
    }
    counts.Add(line.substr(0, tab), count);
  }
  return counts;
}

void WriteBoundReportCsv(std::ostream& out, const BoundReport& report) {
  WriteSchemaLine(out, kBoundReportSchema);
  out << "# check: " << report.check << '\n'
      << "# theta: " << FormatDouble(report.theta) << '\n'
      << "# epsilon: " << FormatDouble(report.epsilon) << '\n'
      << "# all_pass: " << Bool(report.all_pass) << '\n'
      << "x,residual,bound,margin,pass\n";
  for (const BoundRow& r : report.rows) {
    out << r.x << ',' << FormatDouble(r.residual) << ','
        << FormatDouble(r.bound) << ',' << FormatDouble(r.margin) << ','
        << Bool(r.pass) << '\n';
  }
}

nlohmann::json BoundReportJson(const BoundReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundRow& r : report.rows) {
    rows.push_back({{"x", r.x},
                    {"residual", r.residual},
                    {"bound", r.bound},
                    {"margin", r.margin},
                    {"pass", r.pass}});
  }
  return {{"schema", kBoundReportSchema},
          {"check", report.check},
          {"theta", report.theta},
          {"epsilon", report.epsilon},
          {"all_pass", report.all_pass},
          {"rows", rows}};
}

void WriteProductCsv(std::ostream& out, double theta,
                     std::span<const ProductRatio> ratios) {
  WriteSchemaLine(out, kProductSchema);
  out << "# theta: " << FormatDouble(theta) << '\n' << "x,ratio\n";
  for (const ProductRatio& r : ratios) {
    out << r.x << ',' << FormatDouble(r.ratio) << '\n';
  }
}

void WriteIntegralCsv(std::ostream& out, double alpha,
                      std::span<const IntegralValue> values, bool bounded) {
  WriteSchemaLine(out, kIntegralSchema);
  out << "# alpha: " << FormatDouble(alpha) << '\n'
      << "# bounded: " << Bool(bounded) << '\n'
      << "upper,integral\n";
  for (const IntegralValue& v : values) {
    out << FormatDouble(v.upper) << ',' << FormatDouble(v.value) << '\n';
  }
}

nlohmann::json ThetaFitJson(const ThetaFit& fit) {
  return {{"schema", kFitSchema},
          {"model", FitModelName(fit.model)},
          {"theta_hat", Number(fit.theta_hat)},
          {"beta_hat", Optional(fit.beta_hat)},
          {"lambda_hat", Optional(fit.lambda_hat)},
          {"scale", Number(fit.scale)},
          {"goodness", Number(fit.goodness)},
          {"goodness_power", Number(fit.goodness_power)},
          {"goodness_exponential", Number(fit.goodness_exponential)},
          {"tail_start", fit.tail_start},
          {"points_used", fit.points_used}};
}

void WriteSmoothedCsv(std::ostream& out, const SmoothedDistribution& dist) {
  WriteSchemaLine(out, kSmoothSchema);
  out << "# method: " << SmoothingMethodName(dist.method) << '\n'
      << "# unseen_mass: " << FormatDouble(dist.unseen_mass) << '\n'
      << "species,count,probability\n";
  for (const auto& e : dist.entries) {
    out << CsvField(e.species) << ',' << e.count << ','
        << FormatDouble(e.probability) << '\n';
  }
}

nlohmann::json SmoothedJson(const SmoothedDistribution& dist) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : dist.entries) {
    entries.push_back({{"species", e.species},
                       {"count", e.count},
                       {"probability", e.probability}});
  }
  return {{"schema", kSmoothSchema},
          {"method", SmoothingMethodName(dist.method)},
          {"unseen_mass", dist.unseen_mass},
          {"probabilities", entries}};
}

void WriteReestimationCsv(std::ostream& out, const ReestimationReport& report) {
  WriteSchemaLine(out, kReestimationSchema);
  out << "# theta: " << FormatDouble(report.theta) << '\n'
      << "# replicates: " << report.replicates << '\n'
      << "x,mean_n_x,samples,mean_x_star,mean_relative_error,"
         "relative_error_of_mean\n";
  for (const ReestimationRow& r : report.rows) {
    out << r.x << ',' << FormatDouble(r.mean_n_x) << ',' << r.samples << ','
        << OptionalField(r.mean_x_star) << ','
        << OptionalField(r.mean_relative_error) << ','
        << OptionalField(r.relative_error_of_mean) << '\n';
  }
}

nlohmann::json ReestimationJson(const ReestimationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReestimationRow& r : report.rows) {
    rows.push_back({{"x", r.x},
                    {"mean_n_x", r.mean_n_x},
                    {"samples", r.samples},
                    {"mean_x_star", Optional(r.mean_x_star)},
                    {"mean_relative_error", Optional(r.mean_relative_error)},
                    {"relative_error_of_mean",
                     Optional(r.relative_error_of_mean)}});
  }
  return {{"schema", kReestimationSchema},
          {"theta", report.theta},
          {"replicates", report.replicates},
          {"rows", rows}};
}

}  // namespace freqlaw
