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

// Deterministic synthetic utility samples for (alternative, attribute) pairs.
//
// Each pair draws from its own substream keyed by (seed, pair index), so
// editing one pair never perturbs another. In exact mode the draws are
// affinely rescaled so the sample mean and unbiased sample variance equal
// the targets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoweight/model.hpp"

namespace infoweight {

enum class MomentMode { kExact, kStochastic };
enum class Family { kNormal };

std::string_view ToString(MomentMode mode);
std::string_view ToString(Family family);
std::optional<MomentMode> ParseMomentMode(std::string_view text);
std::optional<Family> ParseFamily(std::string_view text);

struct ScenarioPair {
  std::string alternative;
  std::string attribute;
  double target_mean = 0.0;
  double target_variance = 0.0;
  std::size_t sample_count = 0;
};

struct ScenarioSpec {
  std::vector<ScenarioPair> pairs;
  std::uint64_t seed = 0;
  MomentMode moment_mode = MomentMode::kExact;
  Family family = Family::kNormal;

  // Throws Error(kInvalidSpec).
  void Validate() const;
};

// Samples of every pair in spec order; situation ids are "s" followed by the
// zero-padded draw index.
std::vector<UtilitySample> GenerateRawSamples(const ScenarioSpec& spec);

SampleSet GenerateSamples(const ScenarioSpec& spec);

// Two alternatives (AI1, AI2) by two attributes (force_protection,
// proportionality) with 300 situations per pair:
//   AI1: 15 (7.0), 4 (1.0)    AI2: 8 (2.5), 10 (4.0)
ScenarioSpec UseCaseScenario(std::uint64_t seed = 42);

// Subjective prior over the use-case alternatives: force_protection
// (0.7, 0.3), proportionality (0.1, 0.9).
Matrix<double> UseCasePrior();

}  // namespace infoweight
