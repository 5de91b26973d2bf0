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

#include "infoweight/reproduce.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "infoweight/errors.hpp"
#include "infoweight/io.hpp"
#include "infoweight/report.hpp"

namespace infoweight {
namespace {

constexpr const char* kSamplesSource = "samples.csv";
constexpr const char* kPriorSource = "prior.csv";

class CheckList {
 public:
  CheckList(const MomentMatrices& moments, const ReproductionOptions& options)
      : moments_(moments), options_(options) {}

  void Add(std::string table, std::string cell, double expected, double actual,
           double tolerance) {
    ReproductionCheck check{std::move(table), std::move(cell), expected, actual,
                            tolerance};
    if (const auto it = options_.expected_overrides.find(check.key());
        it != options_.expected_overrides.end()) {
      check.expected = it->second;
      used_.insert(it->first);
    }
    checks_.push_back(std::move(check));
  }

  // One check per attribute.
  void PerAttribute(const std::string& table, const std::string& column,
                    const std::vector<double>& expected,
                    const std::vector<double>& actual, double tolerance) {
    for (std::size_t r = 0; r < expected.size(); ++r) {
      Add(table, column + "/" + moments_.attributes[r], expected[r], actual[r],
          tolerance);
    }
  }

  // One check per alternative.
  void PerAlternative(const std::string& table, const std::string& row,
                      const std::vector<double>& expected,
                      const std::vector<double>& actual, double tolerance) {
    for (std::size_t m = 0; m < expected.size(); ++m) {
      Add(table, row + "/" + moments_.alternatives[m], expected[m], actual[m],
          tolerance);
    }
  }

  std::vector<ReproductionCheck> Finish() {
    for (const auto& [key, _] : options_.expected_overrides) {
      if (!used_.count(key)) {
        throw Error(ErrorCode::kInvalidConfig, "unknown check '" + key + "'");
      }
    }
    return std::move(checks_);
  }

 private:
  const MomentMatrices& moments_;
  const ReproductionOptions& options_;
  std::vector<ReproductionCheck> checks_;
  std::set<std::string> used_;
};

void Missing(CheckList& checks, const std::string& table,
             const std::string& cell) {
  checks.Add(table, cell, 0.0, std::nan(""), 0.0);
}

std::vector<ReproductionCheck> BuildChecks(const Report& report,
                                           const ReproductionOptions& options) {
  const MomentMatrices& mom = report.moments;
  CheckList checks(mom, options);

  // Moments come from the generated samples, not from the targets.
  const double target_mean[2][2] = {{15, 4}, {8, 10}};
  const double target_var[2][2] = {{7.0, 1.0}, {2.5, 4.0}};
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t r = 0; r < 2; ++r) {
      const std::string cell = mom.alternatives[m] + "/" + mom.attributes[r];
      checks.Add("A1", "Mean/" + cell, target_mean[m][r], mom.gamma(m, r), 1e-9);
      checks.Add("A1", "Variance/" + cell, target_var[m][r], mom.lambda(m, r),
                 1e-9 * target_var[m][r]);
    }
  }

  if (report.relative_variance) {
    const Matrix<double>& p = report.relative_variance->p;
    const double reference_p[2][2] = {{0.7368, 0.2}, {0.2632, 0.8}};
    const double reference_ln[2][2] = {{-0.3054, -1.6094}, {-1.3350, -0.2231}};
    for (std::size_t m = 0; m < 2; ++m) {
      for (std::size_t r = 0; r < 2; ++r) {
        const std::string cell = mom.alternatives[m] + "/" + mom.attributes[r];
        checks.Add("A2", "NormalisedVariance/" + cell, reference_p[m][r], p(m, r),
                   5e-5);
        checks.Add("A2", "Ln/" + cell, reference_ln[m][r], std::log(p(m, r)), 5e-5);
      }
    }
  } else {
    Missing(checks, "A2", "NormalisedVariance");
  }

  if (report.entropies) {
    checks.PerAttribute("A3", "Entropy", {0.5763, 0.5004}, report.entropies->e, 5e-4);
  } else {
    Missing(checks, "A3", "Entropy");
  }
  if (report.divergences) {
    checks.PerAttribute("A4", "IGH", {0.0014, 0.0193}, report.divergences->d, 2e-4);
  } else {
    Missing(checks, "A4", "IGH");
  }
  if (report.igd) {
    checks.PerAttribute("A5", "IGD", {0.0767, 0.0767}, report.igd->g, 5e-4);
  } else {
    Missing(checks, "A5", "IGD");
  }

  struct MethodTargets {
    Method method;
    const char* table;
    double full_weights_tol;
    std::vector<double> full_weights;
    std::vector<double> rounded_weights;
    std::vector<double> expectations;
    std::vector<double> ranks;
  };
  const MethodTargets targets[] = {
      {Method::kIcw, "A3", 5e-4, {0.5353, 0.4647}, {0.54, 0.46}, {9.94, 8.92}, {1, 2}},
      {Method::kIghw, "A4", 5e-4, {0.0694, 0.9306}, {0.07, 0.93}, {4.77, 9.86}, {2, 1}},
      {Method::kIgdw, "A5", 0.0, {0.5, 0.5}, {0.50, 0.50}, {9.5, 9.0}, {1, 2}},
  };
  for (const auto& t : targets) {
    const std::string name(ToString(t.method));
    const MethodOutcome* outcome = report.Find(t.method);
    if (outcome == nullptr || !outcome->ok()) {
      Missing(checks, t.table, name);
      continue;
    }
    const RankingReport& rk = *outcome->ranking;
    std::vector<double> ranks(rk.ranks.begin(), rk.ranks.end());
    checks.PerAttribute(t.table, name, t.full_weights, outcome->weights->weights,
                        t.full_weights_tol);
    checks.PerAttribute("T3", name + "-Weight", t.rounded_weights, rk.weights_used,
                        1e-12);
    checks.PerAlternative("T3", name + "-Expectation", t.expectations,
                          rk.expectations, 5e-3);
    checks.PerAlternative("T3", name + "-Ranking", t.ranks, ranks, 0.0);
  }
  return checks.Finish();
}

}  // namespace

bool ReproductionCheck::passed() const {
  return std::abs(actual - expected) <= tolerance;
}

bool ReproductionResult::ok() const { return failures().empty(); }

std::vector<const ReproductionCheck*> ReproductionResult::failures() const {
  std::vector<const ReproductionCheck*> out;
  for (const auto& c : checks) {
    if (!c.passed()) out.push_back(&c);
  }
  return out;
}

EngineConfig ReferenceProfile() {
  EngineConfig config;
  config.entropy_log_base = std::numbers::e;
  config.kld_log_base = 10.0;
  config.report_weight_rounding = 2;
  return config;
}

ReproductionResult RunReproduction(const ReproductionOptions& options) {
  ScenarioSpec scenario = UseCaseScenario(options.seed);
  SampleSet samples = GenerateSamples(scenario);
  PriorProfile prior = ValidatePrior(UseCasePrior(), samples, kPriorSource);
  const EngineConfig config = ReferenceProfile();

  Report report = RunPipeline(samples, &prior, config, kAllMethods);
  report.provenance.inputs = {
      {"scenario", "scenario.json", Sha256Hex(FormatScenarioJson(scenario))},
      {"samples", kSamplesSource, Sha256Hex(FormatSamples(samples))},
      {"prior", kPriorSource,
       Sha256Hex(FormatPriorCsv(prior, samples.alternatives(), samples.attributes()))},
  };

  std::vector<ReproductionCheck> checks = BuildChecks(report, options);
  return ReproductionResult{std::move(scenario), std::move(samples),
                            std::move(prior), std::move(report), std::move(checks)};
}

std::string FormatChecks(const ReproductionResult& result) {
  std::string out;
  for (const auto& c : result.checks) {
    out += (c.passed() ? "PASS " : "FAIL ") + c.key() +
           " expected=" + FormatShortest(c.expected) +
           " actual=" + FormatShortest(c.actual) +
           " tolerance=" + FormatShortest(c.tolerance) + "\n";
  }
  out += result.ok() ? "all checks passed\n"
                     : std::to_string(result.failures().size()) + " check(s) failed\n";
  return out;
}

ReproductionResult ReproducePaper(const std::filesystem::path& out_dir,
                                  const ReproductionOptions& options) {
  ReproductionResult result = RunReproduction(options);
  const auto& alts = result.samples.alternatives();
  const auto& attrs = result.samples.attributes();

  WriteTextFile(out_dir / "scenario.json", FormatScenarioJson(result.scenario));
  WriteTextFile(out_dir / kSamplesSource, FormatSamples(result.samples));
  WriteTextFile(out_dir / kPriorSource, FormatPriorCsv(result.prior, alts, attrs));
  WriteTextFile(out_dir / "config.json", FormatConfigJson(result.report.config));
  WriteTextFile(out_dir / "report.json",
                RenderReport(result.report, {ReportFormat::kJson, true, 4}));
  WriteTextFile(out_dir / "tables.txt",
                RenderReport(result.report, {ReportFormat::kText, true, 4}));
  WriteTextFile(out_dir / "checks.txt", FormatChecks(result));

  const auto failures = result.failures();
  if (!failures.empty()) {
    std::string detail;
    for (const ReproductionCheck* c : failures) {
      if (!detail.empty()) detail += "; ";
      detail += "table " + c->table + " cell " + c->cell +
                " expected " + FormatShortest(c->expected) +
                " actual " + FormatShortest(c->actual);
    }
    throw Error(ErrorCode::kReproductionMismatch, detail);
  }
  return result;
}

}  // namespace infoweight
