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

#include "infoweight/scenario_sim.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "infoweight/errors.hpp"
#include "infoweight/moments.hpp"
#include "infoweight/rng.hpp"

namespace infoweight {
namespace {

std::string SituationId(std::size_t index, std::size_t count) {
  const std::string digits = std::to_string(index);
  const std::size_t width = std::to_string(count - 1).size();
  return "s" + std::string(width - digits.size(), '0') + digits;
}

std::vector<double> DrawPair(const ScenarioPair& pair, NormalStream& stream,
                             MomentMode mode) {
  const std::size_t n = pair.sample_count;
  std::vector<double> out(n);

  if (mode == MomentMode::kStochastic) {
    const double sigma = std::sqrt(pair.target_variance);
    for (double& x : out) x = pair.target_mean + sigma * stream.Next();
    return out;
  }

  if (pair.target_variance == 0.0) {
    out.assign(n, pair.target_mean);
    return out;
  }
  for (;;) {
    for (double& x : out) x = stream.Next();
    const PairMoments raw = ComputePairMoments(out);
    if (raw.variance == 0.0) continue;
    const double scale = std::sqrt(pair.target_variance / raw.variance);
    for (double& x : out) x = pair.target_mean + (x - raw.mean) * scale;
    return out;
  }
}

}  // namespace

std::string_view ToString(MomentMode mode) {
  return mode == MomentMode::kExact ? "exact" : "stochastic";
}

std::string_view ToString(Family) { return "normal"; }

std::optional<MomentMode> ParseMomentMode(std::string_view text) {
  if (text == "exact") return MomentMode::kExact;
  if (text == "stochastic") return MomentMode::kStochastic;
  return std::nullopt;
}

std::optional<Family> ParseFamily(std::string_view text) {
  if (text == "normal") return Family::kNormal;
  return std::nullopt;
}

void ScenarioSpec::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidSpec, what);
  };
  if (pairs.empty()) fail("no pairs");

  std::set<std::pair<std::string, std::string>> seen;
  std::set<std::string> alternatives;
  std::set<std::string> attributes;
  for (const auto& p : pairs) {
    const std::string name = "(" + p.alternative + ", " + p.attribute + ")";
    if (p.alternative.empty() || p.attribute.empty()) {
      fail("empty identifier in pair " + name);
    }
    if (!std::isfinite(p.target_mean)) fail("non-finite mean for " + name);
    if (!std::isfinite(p.target_variance) || p.target_variance < 0.0) {
      fail("variance must be finite and >= 0 for " + name);
    }
    if (p.sample_count < 2) fail("sample_count < 2 for " + name);
    if (!seen.emplace(p.alternative, p.attribute).second) {
      fail("duplicate pair " + name);
    }
    alternatives.insert(p.alternative);
    attributes.insert(p.attribute);
  }
  if (seen.size() != alternatives.size() * attributes.size()) {
    fail("pairs do not cover every alternative x attribute combination");
  }
}

std::vector<UtilitySample> GenerateRawSamples(const ScenarioSpec& spec) {
  spec.Validate();
  std::vector<UtilitySample> out;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const ScenarioPair& pair = spec.pairs[i];
    NormalStream stream(SubstreamKey(spec.seed, i));
    const std::vector<double> values = DrawPair(pair, stream, spec.moment_mode);
    for (std::size_t s = 0; s < values.size(); ++s) {
      out.push_back({pair.alternative, pair.attribute,
                     SituationId(s, pair.sample_count), values[s]});
    }
  }
  return out;
}

SampleSet GenerateSamples(const ScenarioSpec& spec) {
  return ValidateSampleSet(GenerateRawSamples(spec));
}

ScenarioSpec UseCaseScenario(std::uint64_t seed) {
  ScenarioSpec spec;
  spec.seed = seed;
  spec.moment_mode = MomentMode::kExact;
  spec.pairs = {
      {"AI1", "force_protection", 15.0, 7.0, 300},
      {"AI1", "proportionality", 4.0, 1.0, 300},
      {"AI2", "force_protection", 8.0, 2.5, 300},
      {"AI2", "proportionality", 10.0, 4.0, 300},
  };
  return spec;
}

Matrix<double> UseCasePrior() {
  Matrix<double> q(2, 2);
  q(0, 0) = 0.7;
  q(1, 0) = 0.3;
  q(0, 1) = 0.1;
  q(1, 1) = 0.9;
  return q;
}

}  // namespace infoweight
