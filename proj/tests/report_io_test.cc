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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(-2.5e-20), "-2.5e-20");
  EXPECT_EQ(FormatDouble(std::nan("")), "nan");
  EXPECT_EQ(FormatDouble(-std::numeric_limits<double>::infinity()), "-inf");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
}

TEST(CsvFieldTest, Rfc4180Quoting) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(CsvField("two\nlines"), "\"two\nlines\"");
}

TEST(CountsTsvTest, RoundTripProperty) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    SpeciesCounts counts;
    const int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) {
      std::string species = (rng() % 4 == 0) ? "#w" : "w";
      species += std::to_string(rng() % 40);
      counts.Add(species, 1 + rng() % 100);
    }
    std::ostringstream out;
    WriteCountsTsv(out, counts);
    const SpeciesCounts back = ParseCountsTsv(out.str());
    ASSERT_EQ(back.size(), counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      EXPECT_EQ(back.entries()[i].species, counts.entries()[i].species);
      EXPECT_EQ(back.entries()[i].count, counts.entries()[i].count);
    }
  }
}

TEST(CountsTsvTest, SchemaLineAndErrors) {
  SpeciesCounts counts;
  counts.Add("a", 2);
  std::ostringstream out;
  WriteCountsTsv(out, counts);
  EXPECT_EQ(out.str(), "# schema: freqlaw.counts/1\na\t2\n");
  EXPECT_THROW(ParseCountsTsv("a 2\n"), DataError);
  EXPECT_THROW(ParseCountsTsv("a\t0\n"), DataError);
  EXPECT_THROW(ParseCountsTsv("a\t2x\n"), DataError);
  EXPECT_EQ(ParseCountsTsv("\r\n# note\na\t1\r\na\t2\n").Count("a"), 3u);
}

TEST(BoundReportCsvTest, HeaderAndColumns) {
  const BoundReport report = TuringBoundCheck(2, 3);
  std::ostringstream out;
  WriteBoundReportCsv(out, report);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# schema: freqlaw.bound-report/1");
  while (std::getline(lines, line) && line.starts_with("#")) {
  }
  EXPECT_EQ(line, "x,residual,bound,margin,pass");
  std::getline(lines, line);
  EXPECT_TRUE(line.starts_with("2,")) << line;
  EXPECT_TRUE(line.ends_with(",true")) << line;
}

TEST(BoundReportJsonTest, StableKeyOrder) {
  const BoundReport report = GeneralBoundCheck(1.5, 10, 12);
  const std::string a = BoundReportJson(report).dump();
  const std::string b = BoundReportJson(GeneralBoundCheck(1.5, 10, 12)).dump();
  EXPECT_EQ(a, b);
  EXPECT_LT(a.find("\"all_pass\""), a.find("\"check\""));
  EXPECT_LT(a.find("\"rows\""), a.find("\"schema\""));
  const auto parsed = nlohmann::json::parse(a);
  EXPECT_EQ(parsed["schema"], "freqlaw.bound-report/1");
  EXPECT_EQ(parsed["rows"].size(), 3u);
}

TEST(SmoothedOutputTest, CsvAndJsonCarryUnseenMass) {
  SpeciesCounts counts;
  counts.Add("a", 2);
  counts.Add("b,c", 1);
  counts.Add("d", 1);
  const SmoothedDistribution dist = GoodTuringSmooth(counts);
  std::ostringstream out;
  WriteSmoothedCsv(out, dist);
  EXPECT_NE(out.str().find("# unseen_mass: 0.5\n"), std::string::npos);
  EXPECT_NE(out.str().find("\"b,c\",1,"), std::string::npos);
  const auto json = SmoothedJson(dist);
  EXPECT_EQ(json["schema"], "freqlaw.smooth/1");
  EXPECT_EQ(json["unseen_mass"], 0.5);
  EXPECT_EQ(json["probabilities"].size(), 3u);
}

TEST(ThetaFitJsonTest, ExponentialHasNullBeta) {
  ThetaFit fit;
  fit.model = FitModel::kExponential;
  fit.theta_hat = 1;
  fit.lambda_hat = 0.25;
  const auto json = ThetaFitJson(fit);
  EXPECT_TRUE(json["beta_hat"].is_null());
  EXPECT_EQ(json["lambda_hat"], 0.25);
  EXPECT_EQ(json["model"], "exponential");
  EXPECT_EQ(json["schema"], "freqlaw.fit/1");
}

TEST(ReestimationCsvTest, GapsAreEmptyFields) {
  ReestimationReport report;
  report.theta = 1;
  report.replicates = 2;
  ReestimationRow row;
  row.x = 4;
  row.mean_n_x = 0;
  row.samples = 0;
  report.rows.push_back(row);
  std::ostringstream out;
  WriteReestimationCsv(out, report);
  EXPECT_NE(out.str().find("\n4,0,0,,,\n"), std::string::npos) << out.str();
  EXPECT_TRUE(ReestimationJson(report)["rows"][0]["mean_x_star"].is_null());
}

}  // namespace
}  // namespace freqlaw
