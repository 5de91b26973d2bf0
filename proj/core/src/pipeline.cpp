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

#include "infoweight/pipeline.hpp"

#include <algorithm>

#include "infoweight/moments.hpp"
#include "infoweight/version.hpp"

namespace infoweight {
namespace {

MethodOutcome Failed(Method method, const Error& error) {
  MethodOutcome out;
  out.method = method;
  out.error_code = error.code();
  out.error_message = error.detail();
  return out;
}

}  // namespace

const MethodOutcome* Report::Find(Method method) const {
  for (const auto& m : methods) {
    if (m.method == method) return &m;
  }
  return nullptr;
}

std::string ToolVersion() { return std::string("infoweight ") + kVersionString; }

Report RunPipeline(const SampleSet& samples, const PriorProfile* prior,
                   const EngineConfig& config, std::span<const Method> methods) {
  config.Validate();

  std::vector<Method> requested;
  for (Method m : kAllMethods) {
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) {
      requested.push_back(m);
    }
  }
  const bool wants_ighw =
      std::find(requested.begin(), requested.end(), Method::kIghw) !=
      requested.end();
  if (wants_ighw && prior == nullptr) {
    throw Error(ErrorCode::kMissingPrior, "IGHW requires a prior");
  }
  if (prior != nullptr && !prior->q.SameShape(samples.num_alternatives(),
                                              samples.num_attributes())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prior shape does not match the sample set");
  }

  Report report;
  report.config = config;
  report.provenance.tool_version = ToolVersion();
  report.warnings = samples.warnings();
  report.moments = ComputeMoments(samples);
  if (requested.empty()) return report;

  try {
    report.relative_variance = RelativeVariance(report.moments, config);
    report.entropies = Entropy(*report.relative_variance, config.entropy_log_base);
  } catch (const Error& e) {
    for (Method m : requested) report.methods.push_back(Failed(m, e));
    return report;
  }
  for (const auto& w : report.relative_variance->warnings) {
    report.warnings.push_back(w);
  }

  for (Method method : requested) {
    try {
      WeightVector weights;
      switch (method) {
        case Method::kIcw:
          weights = Icw(*report.entropies, config);
          break;
        case Method::kIghw:
          report.divergences = Kld(*report.relative_variance, *prior, config);
          weights = Ighw(*report.divergences, config);
          break;
        case Method::kIgdw:
          report.igd = Igd(*report.entropies, config);
          weights = Igdw(*report.igd, config);
          break;
      }
      MethodOutcome outcome;
      outcome.method = method;
      outcome.ranking = BuildRankingReport(report.moments, weights,
                                           config.report_weight_rounding);
      outcome.weights = std::move(weights);
      report.methods.push_back(std::move(outcome));
    } catch (const Error& e) {
      report.methods.push_back(Failed(method, e));
    }
  }
  return report;
}

}  // namespace infoweight
