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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infoweight/errors.hpp"
#include "infoweight/model.hpp"
#include "infoweight/ranking.hpp"
#include "infoweight/weighting.hpp"

namespace infoweight {

// Result of one weighting method. Either weights and ranking are set, or
// error_code/error_message describe why the method could not run.
struct MethodOutcome {
  Method method = Method::kIcw;
  std::optional<WeightVector> weights;
  std::optional<RankingReport> ranking;
  std::optional<ErrorCode> error_code;
  std::string error_message;

  bool ok() const noexcept { return !error_code.has_value(); }
};

struct InputDigest {
  std::string role;    // "samples", "prior", "scenario", "config"
  std::string source;  // file name as given
  std::string sha256;
};

struct Provenance {
  std::string tool_version;
  std::vector<InputDigest> inputs;
};

struct Report {
  MomentMatrices moments;
  std::optional<RelativeVarianceProfile> relative_variance;
  std::optional<EntropyVector> entropies;
  std::optional<DivergenceVector> divergences;
  std::optional<IgdVector> igd;
  std::vector<MethodOutcome> methods;  // canonical order ICW, IGHW, IGDW
  EngineConfig config;
  Provenance provenance;
  std::vector<std::string> warnings;

  const MethodOutcome* Find(Method method) const;
};

std::string ToolVersion();

// Runs moments -> relative variance -> entropy -> {ICW | KLD -> IGHW |
// IGD -> IGDW} -> expected utility -> rank for each requested method.
//
// Throws only for invalid inputs: a bad config, IGHW without a prior, or a
// prior whose shape does not match. Failures inside a method are recorded
// in its MethodOutcome and do not stop the other methods.
Report RunPipeline(const SampleSet& samples, const PriorProfile* prior,
                   const EngineConfig& config, std::span<const Method> methods);

}  // namespace infoweight
