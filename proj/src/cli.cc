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

#include "freqlaw/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "freqlaw/asymptote.h"
#include "freqlaw/corpus.h"
#include "freqlaw/errors.h"
#include "freqlaw/estimation.h"
#include "freqlaw/histogram.h"
#include "freqlaw/report_io.h"
#include "freqlaw/simulation.h"
#include "freqlaw/verification.h"

namespace freqlaw {
namespace {

struct InputOptions {
  std::string path;
  std::string input_format = "text";
  std::string tokenizer = "whitespace";
  bool lowercase = false;
  std::uint64_t min_count = 0;
};

void AddInputOptions(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("file", opts.path, "Corpus file, or - for stdin")
      ->required();
  cmd->add_option("--input", opts.input_format,
                  "text (tokenized corpus) or counts (species<TAB>count)")
      ->check(CLI::IsMember({"text", "counts"}));
  cmd->add_option("--tokenizer", opts.tokenizer, "whitespace or unicode-word")
      ->check(CLI::IsMember({"whitespace", "unicode-word"}));
  cmd->add_flag("--lowercase", opts.lowercase, "Fold case before counting");
  cmd->add_option("--min-count", opts.min_count,
                  "Drop species seen fewer times");
}

std::string ReadAll(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot read file: " + path);
  std::string data((std::istreambuf_iterator<char>(file)), {});
  if (file.bad()) throw DataError("cannot read file: " + path);
  return data;
}

SpeciesCounts LoadCounts(const InputOptions& opts, std::istream& in) {
  const std::string data = ReadAll(opts.path, in);
  if (opts.input_format == "counts") {
    SpeciesCounts counts = ParseCountsTsv(data);
    return opts.min_count > 1 ? counts.Filtered(opts.min_count) : counts;
  }
  CorpusConfig config;
  config.tokenizer = opts.tokenizer == "unicode-word" ? Tokenizer::kUnicodeWord
                                                      : Tokenizer::kWhitespace;
  config.lowercase = opts.lowercase;
  config.min_count = opts.min_count;
  return TokenizeAndCount(data, config);
}

void WriteHistogramRows(std::ostream& out, const FrequencyHistogram& h) {
  out << "x,N_x\n";
  for (const auto& [x, n] : h.cells()) {
    out << x << ',' << FormatDouble(n) << '\n';
  }
}

nlohmann::json HistogramJson(const FrequencyHistogram& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [x, n] : h.cells()) rows.push_back({{"x", x}, {"N_x", n}});
  return rows;
}

void Analyze(const SpeciesCounts& counts, const std::string& format,
             std::ostream& out) {
  const FrequencyHistogram h = BuildHistogram(counts);
  const double total = TotalPopulation(h);
  const std::uint64_t top = h.max_count();
  const double f_top = total > 0 ? static_cast<double>(top) / total : 0.0;
  const std::vector<std::string> ranking = BuildRanking(counts);

  if (format == "json") {
    nlohmann::json ranks = nlohmann::json::array();
    std::uint64_t r = 1;
    for (const std::string& s : ranking) {
      ranks.push_back(
          {{"rank", r++},
           {"species", s},
           {"count", counts.Count(s)},
           {"frequency", static_cast<double>(counts.Count(s)) / total}});
    }
    nlohmann::json doc = {{"schema", "freqlaw.analyze/1"},
                          {"N", total},
                          {"X", top},
                          {"N_1", h.At(1)},
                          {"f_X", f_top},
                          {"species", counts.size()},
                          {"histogram", HistogramJson(h)},
                          {"rank_frequency", ranks}};
    out << doc.dump(2) << '\n';
    return;
  }
  WriteSchemaLine(out, "freqlaw.analyze/1");
  out << "# N: " << FormatDouble(total) << '\n'
      << "# X: " << top << '\n'
      << "# N_1: " << FormatDouble(h.At(1)) << '\n'
      << "# f_X: " << FormatDouble(f_top) << '\n'
      << "# species: " << counts.size() << '\n';
  WriteHistogramRows(out, h);
  out << "\nrank,species,count,frequency\n";
  std::uint64_t r = 1;
  for (const std::string& s : ranking) {
    const std::uint64_t c = counts.Count(s);
    out << r++ << ',' << CsvField(s) << ',' << c << ','
        << FormatDouble(static_cast<double>(c) / total) << '\n';
  }
}

void ReestimateCommand(const SpeciesCounts& counts, double theta,
                       bool interpolate, const std::string& format,
                       std::ostream& out) {
  const SparseTailPolicy policy =
      interpolate ? SparseTailPolicy::kInterpolated : SparseTailPolicy::kRaw;
  const auto rows =
      ReestimateTable(BuildHistogram(counts), Theta(theta), policy);
  const char* policy_name = interpolate ? "interpolated" : "raw";
  if (format == "json") {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
      table.push_back({{"x", row.x}, {"N_x", row.n_x}, {"x_star", row.x_star}});
    }
    out << nlohmann::json{{"schema", "freqlaw.reestimate/1"},
                          {"theta", theta},
                          {"policy", policy_name},
                          {"rows", table}}
               .dump(2)
        << '\n';
    return;
  }
  WriteSchemaLine(out, "freqlaw.reestimate/1");
  out << "# theta: " << FormatDouble(theta) << '\n'
      << "# policy: " << policy_name << '\n'
      << "x,N_x,x_star\n";
  for (const auto& row : rows) {
    out << row.x << ',' << FormatDouble(row.n_x) << ','
        << FormatDouble(row.x_star) << '\n';
  }
}

AsymptoteSpec PlotModel(const std::string& law, const SpeciesCounts& counts,
                        const RankFrequencySeries& series,
                        std::optional<std::uint64_t> tail_start) {
  if (law == "turing") {
    const double n1 = BuildHistogram(counts).At(1);
    if (n1 == 0) throw DataError("turing law needs N_1 > 0");
    return AsymptoteSpec::TuringLaw(n1);
  }
  if (law == "zipf") {
    return AsymptoteSpec::ZipfLaw(series.points().front().frequency, 0.0);
  }
  const ThetaFit fit = FitTheta(series, tail_start);
  if (fit.model == FitModel::kExponential) {
    return AsymptoteSpec::ExponentialLaw(fit.scale, *fit.lambda_hat);
  }
  // theta_hat > 1 whenever beta_hat > 0.
  return AsymptoteSpec::PowerLaw(fit.theta_hat, fit.scale);
}

struct VerifyOptions {
  std::string check;
  double theta = 1.5;
  std::optional<double> alpha;
  std::optional<std::uint64_t> x_min;
  std::optional<std::uint64_t> x_max;
  double epsilon = 0;
  int decades = 12;
  std::string format = "csv";
};

void VerifyCommand(const VerifyOptions& o, std::ostream& out) {
  if (o.check == "turing-bound" || o.check == "general-bound") {
    const bool turing = o.check == "turing-bound";
    const BoundReport report =
        turing ? TuringBoundCheck(o.x_min.value_or(2),
                                  o.x_max.value_or(100000), o.epsilon)
               : GeneralBoundCheck(o.theta, o.x_min.value_or(10),
                                   o.x_max.value_or(10000), o.epsilon);
    if (o.format == "json") {
      out << BoundReportJson(report).dump(2) << '\n';
    } else {
      WriteBoundReportCsv(out, report);
    }
    return;
  }
  if (o.check == "product") {
    const std::uint64_t lo = o.x_min.value_or(1);
    const std::uint64_t hi = o.x_max.value_or(1000);
    if (lo < 1 || lo > hi) {
      throw InvalidArgumentError("need 1 <= x-min <= x-max");
    }
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = lo; x <= hi; ++x) xs.push_back(x);
    const auto ratios = ProductApproxCheck(o.theta, xs);
    if (o.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : ratios) rows.push_back({{"x", r.x}, {"ratio", r.ratio}});
      out << nlohmann::json{{"schema", kProductSchema},
                            {"theta", o.theta},
                            {"rows", rows}}
                 .dump(2)
          << '\n';
    } else {
      WriteProductCsv(out, o.theta, ratios);
    }
    return;
  }
  // integral: exponent alpha = -1/(theta - 1) unless given directly.
  double alpha;
  if (o.alpha) {
    alpha = *o.alpha;
  } else {
    if (o.theta == 1.0) {
      throw InvalidArgumentError(
          "theta = 1 has an exponential asymptote; pass --alpha instead");
    }
    alpha = -1.0 / (o.theta - 1.0);
  }
  const auto values = IntegralConvergenceProbe(alpha, DecadeGrid(o.decades));
  const bool bounded = ProbeIsBounded(values);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : values) {
      rows.push_back({{"upper", v.upper}, {"integral", v.value}});
    }
    out << nlohmann::json{{"schema", kIntegralSchema},
                          {"alpha", alpha},
                          {"bounded", bounded},
                          {"rows", rows}}
               .dump(2)
        << '\n';
  } else {
    WriteIntegralCsv(out, alpha, values, bounded);
  }
}

struct SimulateOptions {
  double theta = 1;
  std::uint64_t species = 1000;
  std::uint64_t tokens = 100000;
  std::uint64_t seed = 0;
  double n1 = 10;
  std::optional<double> geometric_p;
  bool reestimate = false;
  std::optional<double> reestimate_theta;
  std::size_t replicates = 1;
  std::optional<std::uint64_t> report_x_max;
  std::string emit = "histogram";
  std::string format = "csv";
};

void SimulateCommand(const SimulateOptions& o, std::ostream& out) {
  if (o.species < 1) throw InvalidArgumentError("--species must be >= 1");
  if (o.tokens < 1) throw InvalidArgumentError("--tokens must be >= 1");
  if (o.replicates < 1) throw InvalidArgumentError("--replicates must be >= 1");
  std::optional<PopulationModel> model;
  if (o.geometric_p) {
    model = PopulationModel::Geometric(*o.geometric_p, o.species, o.seed);
  } else if (o.theta == 1.0) {
    model.emplace(AsymptoteSpec::TuringLaw(o.n1), o.species, o.seed);
  } else {
    model.emplace(AsymptoteSpec::PowerLaw(o.theta, 1.0), o.species, o.seed);
  }
  const double law_theta = model->spec().theta();

  const SpeciesCounts counts = SampleTokens(*model, o.tokens);
  if (o.emit == "counts") {
    WriteCountsTsv(out, counts);
    return;
  }
  const FrequencyHistogram h = BuildHistogram(counts);
  std::optional<ReestimationReport> report;
  if (o.reestimate) {
    ReestimationOptions ro;
    ro.replicates = o.replicates;
    ro.x_max = o.report_x_max;
    report = EmpiricalReestimationReport(
        *model, o.tokens, Theta(o.reestimate_theta.value_or(law_theta)), ro);
  }

  if (o.format == "json") {
    nlohmann::json doc = {{"schema", "freqlaw.simulate/1"},
                          {"theta", law_theta},
                          {"species", o.species},
                          {"tokens", o.tokens},
                          {"seed", o.seed},
                          {"observed_species", counts.size()},
                          {"histogram", HistogramJson(h)}};
    if (report) doc["reestimation"] = ReestimationJson(*report);
    out << doc.dump(2) << '\n';
    return;
  }
  WriteSchemaLine(out, "freqlaw.simulate/1");
  out << "# theta: " << FormatDouble(law_theta) << '\n'
      << "# species: " << o.species << '\n'
      << "# tokens: " << o.tokens << '\n'
      << "# seed: " << o.seed << '\n'
      << "# observed_species: " << counts.size() << '\n';
  WriteHistogramRows(out, h);
  if (report) {
    out << '\n';
    WriteReestimationCsv(out, *report);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequency-of-frequencies analysis, theta-family reestimation "
               "and smoothing",
               "freqlaw"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write data here instead of stdout");

  InputOptions input;
  std::string format = "csv";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "Frequency-of-frequencies and ranks");
  AddInputOptions(analyze, input);
  add_format(analyze);

  double theta = 1.0;
  bool interpolate = false;
  CLI::App* reestimate =
      app.add_subcommand("reestimate", "x* = (x + theta) N_{x+1} / N_x");
  AddInputOptions(reestimate, input);
  reestimate->add_option("--theta", theta, "Reestimation parameter")
      ->required();
  reestimate->add_flag("--interpolate", interpolate,
                       "Fill histogram gaps first; keep x* = X at the top");
  add_format(reestimate);

  std::string method = "good-turing";
  std::optional<double> smooth_p;
  std::size_t head = 0;
  std::string backoff_path;
  CLI::App* smooth = app.add_subcommand("smooth", "Smoothed probabilities");
  AddInputOptions(smooth, input);
  smooth->add_option("--method", method, "good-turing or geometric-tail")
      ->check(CLI::IsMember({"good-turing", "geometric-tail"}));
  smooth->add_option("--p", smooth_p, "Geometric p (default 1/N_1)");
  smooth->add_option("--head", head, "Species kept at relative frequency");
  smooth->add_option("--backoff", backoff_path,
                     "Backoff counts used to break ranking ties");
  add_format(smooth);

  std::optional<std::uint64_t> tail_start;
  CLI::App* fit = app.add_subcommand("fit", "Estimate theta from ranks");
  AddInputOptions(fit, input);
  fit->add_option("--tail-start", tail_start, "First rank used in the fit");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Numerical bound checks");
  verify->add_option("--check", verify_opts.check)
      ->required()
      ->check(CLI::IsMember(
          {"turing-bound", "general-bound", "product", "integral"}));
  verify->add_option("--theta", verify_opts.theta);
  verify->add_option("--alpha", verify_opts.alpha,
                     "Integrand exponent for --check integral");
  verify->add_option("--x-min", verify_opts.x_min);
  verify->add_option("--x-max", verify_opts.x_max);
  verify->add_option("--epsilon", verify_opts.epsilon,
                     "Absolute slack in residual <= bound");
  verify->add_option("--decades", verify_opts.decades,
                     "Upper limits 10^1..10^decades for --check integral");
  verify->add_option("--format", verify_opts.format)
      ->check(CLI::IsMember({"csv", "json"}));

  SimulateOptions sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Sample a population from a law");
  simulate->add_option("--theta", sim.theta, "Law parameter (1 or > 1)")
      ->required();
  simulate->add_option("--species", sim.species, "Truncation S");
  simulate->add_option("--tokens", sim.tokens, "Sample size");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--n1", sim.n1, "N_1 of the theta = 1 law");
  simulate->add_option("--geometric-p", sim.geometric_p,
                       "Use a geometric population instead");
  simulate->add_flag("--reestimate", sim.reestimate,
                     "Append a reestimation report");
  simulate->add_option("--reestimate-theta", sim.reestimate_theta,
                       "Theta used for reestimation (default: law theta)");
  simulate->add_option("--replicates", sim.replicates,
                       "Samples averaged in the report");
  simulate->add_option("--report-x-max", sim.report_x_max,
                       "Report rows 1..x instead of the 30-species cutoff");
  simulate->add_option("--emit", sim.emit, "histogram or counts")
      ->check(CLI::IsMember({"histogram", "counts"}));
  simulate->add_option("--format", sim.format)
      ->check(CLI::IsMember({"csv", "json"}));

  std::string law;
  std::optional<std::uint64_t> r_max;
  CLI::App* plot =
      app.add_subcommand("export-plot", "Empirical vs model f(r) as TSV");
  AddInputOptions(plot, input);
  plot->add_option("--law", law, "fitted, turing or zipf")
      ->required()
      ->check(CLI::IsMember({"fitted", "turing", "zipf"}));
  plot->add_option("--r-max", r_max, "Largest rank (default: species count)");
  plot->add_option("--tail-start", tail_start, "First rank for --law fitted");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (analyze->parsed()) {
      Analyze(LoadCounts(input, in), format, buffer);
    } else if (reestimate->parsed()) {
      ReestimateCommand(LoadCounts(input, in), theta, interpolate, format,
                        buffer);
    } else if (smooth->parsed()) {
      const SpeciesCounts counts = LoadCounts(input, in);
      SmoothedDistribution dist;
      if (method == "good-turing") {
        dist = GoodTuringSmooth(counts);
      } else {
        SpeciesCounts backoff;
        RankingOptions ranking_opts;
        if (!backoff_path.empty()) {
          InputOptions b = input;
          b.path = backoff_path;
          b.min_count = 0;
          backoff = LoadCounts(b, in);
          ranking_opts.backoff = &backoff;
        }
        const auto ranking = BuildRanking(counts, ranking_opts);
        dist = GeometricTailSmooth(counts, ranking,
                                   smooth_p.value_or(DefaultGeometricP(counts)),
                                   head);
      }
      if (format == "json") {
        buffer << SmoothedJson(dist).dump(2) << '\n';
      } else {
        WriteSmoothedCsv(buffer, dist);
      }
    } else if (fit->parsed()) {
      const ThetaFit f =
          FitTheta(RankSeriesFromCounts(LoadCounts(input, in)), tail_start);
      buffer << ThetaFitJson(f).dump(2) << '\n';
    } else if (verify->parsed()) {
      VerifyCommand(verify_opts, buffer);
    } else if (simulate->parsed()) {
      SimulateCommand(sim, buffer);
    } else if (plot->parsed()) {
      const SpeciesCounts counts = LoadCounts(input, in);
      const RankFrequencySeries series = RankSeriesFromCounts(counts);
      const AsymptoteSpec model = PlotModel(law, counts, series, tail_start);
      const std::uint64_t last = r_max.value_or(series.size());
      if (last < 1) throw InvalidArgumentError("--r-max must be >= 1");
      WriteSchemaLine(buffer, "freqlaw.plot/1");
      buffer << "# law: " << law << '\n' << "r\tf_empirical\tf_model\n";
      for (std::uint64_t r = 1; r <= last; ++r) {
        buffer << r << '\t';
        if (r <= series.size()) {
          buffer << FormatDouble(series.points()[r - 1].frequency);
        }
        buffer << '\t'
               << FormatDouble(FrequencyAt(model, static_cast<double>(r)))
               << '\n';
      }
    }
  } catch (const InvalidArgumentError& e) {
    err << "freqlaw: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "freqlaw: " << e.what() << '\n';
    return kExitData;
  }

  if (out_path.empty()) {
    out << buffer.str();
    out.flush();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "freqlaw: cannot write " << out_path << '\n';
      return kExitData;
    }
  }
  return kExitOk;
}

}  // namespace freqlaw
