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

#pragma once

// End-to-end reproduction of the two-scenario use case: generate 1200
// moment-matched samples, run every method under the reference profile
// (entropy in nats, KLD in base 10, weights rounded to 2 decimals before
// aggregation) and compare each reference cell against its tolerance.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "infoweight/model.hpp"
#include "infoweight/pipeline.hpp"
#include "infoweight/scenario_sim.hpp"

namespace infoweight {

struct ReproductionCheck {
  std::string table;  // "A1".."A5", "T3"
  std::string cell;   // e.g. "ICW-Expectation/AI1"
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;

  std::string key() const { return table + "/" + cell; }
  bool passed() const;
};

struct ReproductionOptions {
  std::uint64_t seed = 42;
  // Replaces the reference value of a check, keyed by ReproductionCheck::key.
  // Unknown keys are rejected.
  std::map<std::string, double> expected_overrides;
};

struct ReproductionResult {
  ScenarioSpec scenario;
  SampleSet samples;
  PriorProfile prior;
  Report report;
  std::vector<ReproductionCheck> checks;

  bool ok() const;
  std::vector<const ReproductionCheck*> failures() const;
};

// Reference engine profile for the use case.
EngineConfig ReferenceProfile();

// Runs the reproduction in memory.
ReproductionResult RunReproduction(const ReproductionOptions& options = {});

// Text listing of every check, one per line.
std::string FormatChecks(const ReproductionResult& result);

// Runs the reproduction and writes scenario.json, samples.csv, prior.csv,
// config.json, report.json, tables.txt and checks.txt into `out_dir`.
// Throws Error(kReproductionMismatch) after writing if any check failed.
ReproductionResult ReproducePaper(const std::filesystem::path& out_dir,
                                  const ReproductionOptions& options = {});

}  // namespace infoweight
