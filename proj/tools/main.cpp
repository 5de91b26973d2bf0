// Copyright 2026 The infoweight Authors.
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

// infoweight: attribute weights from simulation statistics.
//
//   infoweight simulate        --spec scenario.json --out samples.csv
//   infoweight weights         --samples samples.csv [--prior prior.csv] ...
//   infoweight rank            --samples samples.csv [--prior prior.csv] ...
//   infoweight reproduce-paper --out reproduction/
//
// Exit status: 0 success, 2 invalid input, 3 reproduction mismatch,
// 4 I/O failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infoweight/errors.hpp"
#include "infoweight/io.hpp"
#include "infoweight/pipeline.hpp"
#include "infoweight/report.hpp"
#include "infoweight/reproduce.hpp"
#include "infoweight/scenario_sim.hpp"

namespace {

using namespace infoweight;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 4;

struct AnalysisFlags {
  std::string samples;
  std::string prior;
  std::string config;
  std::string methods;
  std::string entropy_base;
  std::string kld_base;
  std::optional<int> round_weights;
  std::optional<double> prior_epsilon;
  std::string degenerate_policy;
  std::string igd_policy;
  std::string format = "json";
  std::string out = "-";
};

void AddAnalysisOptions(CLI::App* cmd, AnalysisFlags& f) {
  cmd->add_option("--samples", f.samples, "Samples CSV")->required();
  cmd->add_option("--prior", f.prior, "Prior CSV or JSON (required for IGHW)");
  cmd->add_option("--config", f.config, "Engine config JSON");
  cmd->add_option("--methods", f.methods,
                  "Comma-separated subset of icw,ighw,igdw "
                  "(default: all, or icw,igdw without a prior)");
  cmd->add_option("--entropy-base", f.entropy_base, "Entropy log base, 'e' or > 1");
  cmd->add_option("--kld-base", f.kld_base, "KL divergence log base, 'e' or > 1");
  cmd->add_option("--round-weights", f.round_weights,
                  "Round weights to N decimals before aggregation");
  cmd->add_option("--prior-epsilon", f.prior_epsilon, "Prior smoothing epsilon");
  cmd->add_option("--degenerate-policy", f.degenerate_policy, "error | uniform");
  cmd->add_option("--igd-policy", f.igd_policy, "error | min_shift");
  cmd->add_option("--format", f.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", f.out, "Output file, '-' for stdout");
}

std::vector<Method> ParseMethods(const std::string& text, bool have_prior) {
  if (text.empty()) {
    if (have_prior) return {std::begin(kAllMethods), std::end(kAllMethods)};
    return {Method::kIcw, Method::kIgdw};
  }
  std::vector<Method> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      const auto m = ParseMethod(item);
      if (!m) throw Error(ErrorCode::kInvalidConfig, "unknown method '" + item + "'");
      out.push_back(*m);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// defaults < config file < flags
EngineConfig ResolveConfig(const AnalysisFlags& f) {
  EngineConfig config = f.config.empty() ? EngineConfig{} : ReadConfig(f.config);
  if (!f.entropy_base.empty()) config.entropy_log_base = ParseLogBase(f.entropy_base);
  if (!f.kld_base.empty()) config.kld_log_base = ParseLogBase(f.kld_base);
  if (f.round_weights) config.report_weight_rounding = f.round_weights;
  if (f.prior_epsilon) config.prior_smoothing_epsilon = *f.prior_epsilon;
  if (!f.degenerate_policy.empty()) {
    const auto p = ParseDegenerateVariancePolicy(f.degenerate_policy);
    if (!p) throw Error(ErrorCode::kInvalidConfig, "unknown --degenerate-policy");
    config.degenerate_variance_policy = *p;
  }
  if (!f.igd_policy.empty()) {
    const auto p = ParseIgdNegativePolicy(f.igd_policy);
    if (!p) throw Error(ErrorCode::kInvalidConfig, "unknown --igd-policy");
    config.igd_negative_policy = *p;
  }
  config.Validate();
  return config;
}

std::string FileName(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

int RunAnalysis(const AnalysisFlags& f, bool include_rankings) {
  const EngineConfig config = ResolveConfig(f);
  const std::string samples_text = ReadTextFile(f.samples);
  const SampleSet samples = ParseSamples(std::string_view(samples_text));

  std::optional<PriorProfile> prior;
  std::string prior_text;
  if (!f.prior.empty()) {
    prior_text = ReadTextFile(f.prior);
    const std::string label = FileName(f.prior);
    prior = std::filesystem::path(f.prior).extension() == ".json"
                ? ParsePriorJson(prior_text, samples, label)
                : ParsePriorCsv(prior_text, samples, label);
  }
  const std::vector<Method> methods = ParseMethods(f.methods, prior.has_value());

  Report report = RunPipeline(samples, prior ? &*prior : nullptr, config, methods);
  report.provenance.inputs.push_back(
      {"samples", FileName(f.samples), Sha256Hex(samples_text)});
  if (prior) {
    report.provenance.inputs.push_back(
        {"prior", FileName(f.prior), Sha256Hex(prior_text)});
  }
  if (!f.config.empty()) {
    report.provenance.inputs.push_back(
        {"config", FileName(f.config), Sha256Hex(ReadTextFile(f.config))});
  }

  EmitOptions options;
  options.format = *ParseReportFormat(f.format);
  options.include_rankings = include_rankings;
  EmitReport(report, options, f.out);

  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& m : report.methods) {
    if (!m.ok()) {
      std::cerr << "warning: " << ToString(m.method) << " failed: "
                << ToString(*m.error_code) << ": " << m.error_message << "\n";
    }
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Information-theoretic attribute weights from simulation statistics"};
  app.set_version_flag("--version", ToolVersion());
  app.require_subcommand(1);

  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::string sim_out = "-";
  auto* simulate = app.add_subcommand("simulate", "Generate synthetic utility samples");
  simulate->add_option("--spec", spec_path,
                       "Scenario spec JSON (default: built-in use case)");
  simulate->add_option("--seed", seed, "Override the spec seed");
  simulate->add_option("--out", sim_out, "Samples CSV, '-' for stdout");

  AnalysisFlags weights_flags;
  auto* weights = app.add_subcommand("weights", "Derive attribute weights");
  AddAnalysisOptions(weights, weights_flags);

  AnalysisFlags rank_flags;
  auto* rank = app.add_subcommand("rank", "Derive weights and rank alternatives");
  AddAnalysisOptions(rank, rank_flags);

  std::string repro_out = "reproduction";
  std::uint64_t repro_seed = 42;
  std::vector<std::string> expectations;
  auto* repro = app.add_subcommand(
      "reproduce-paper", "Reproduce the two-scenario use case and check every table");
  repro->add_option("--out", repro_out, "Output directory");
  repro->add_option("--seed", repro_seed, "Sample generation seed");
  repro->add_option("--expect", expectations,
                    "Override a reference value, KEY=VALUE (see checks.txt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (simulate->parsed()) {
    ScenarioSpec spec = spec_path.empty() ? UseCaseScenario() : ReadScenario(spec_path);
    if (seed) spec.seed = *seed;
    const std::string csv = FormatSamples(GenerateSamples(spec));
    if (sim_out == "-") {
      std::cout << csv;
    } else {
      WriteTextFile(sim_out, csv);
    }
    return 0;
  }
  if (weights->parsed()) return RunAnalysis(weights_flags, false);
  if (rank->parsed()) return RunAnalysis(rank_flags, true);

  ReproductionOptions options;
  options.seed = repro_seed;
  for (const auto& e : expectations) {
    const std::size_t eq = e.rfind('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig, "--expect wants KEY=VALUE, got '" + e + "'");
    }
    try {
      options.expected_overrides[e.substr(0, eq)] = std::stod(e.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidConfig, "bad value in --expect '" + e + "'");
    }
  }
  try {
    const ReproductionResult result = ReproducePaper(repro_out, options);
    std::cout << FormatChecks(result);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kReproductionMismatch) {
      std::cout << ReadTextFile(std::filesystem::path(repro_out) / "checks.txt");
    }
    throw;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Main(argc, argv);
  } catch (const infoweight::Error& e) {
    std::cerr << "infoweight: " << e.what() << "\n";
    return infoweight::ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "infoweight: " << e.what() << "\n";
    return kExitIo;
  }
}
