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

// Attribute weights derived from the variance matrix.
//
// Each attribute's variances are normalized into a distribution p over
// alternatives. Three weightings follow from p:
//   ICW   normalized Shannon entropy of p,
//   IGHW  normalized KL divergence of p from a subjective prior q,
//   IGDW  normalized entropy difference E(r) - sum_{j != r} (1 - E(j)).

#include <span>
#include <vector>

#include "infoweight/model.hpp"

namespace infoweight {

struct EntropyVector {
  std::vector<double> e;
  double log_base = 0.0;
};

struct DivergenceVector {
  std::vector<double> d;
  double log_base = 0.0;
};

enum class IgdResolution { kRaw, kMinShifted };

std::string_view ToString(IgdResolution resolution);

struct IgdVector {
  std::vector<double> raw;  // literal formula values
  std::vector<double> g;    // after sign resolution, all >= 0
  IgdResolution resolution = IgdResolution::kRaw;
};

// p(m, r) = lambda(m, r) / sum_i lambda(i, r). A zero column raises
// kDegenerateAttribute, or becomes uniform under the kUniform policy with a
// warning attached.
RelativeVarianceProfile RelativeVariance(const MomentMatrices& moments,
                                         const EngineConfig& config);

// -sum p log_b p with 0 log 0 = 0.
double ShannonEntropy(std::span<const double> distribution, double log_base);

EntropyVector Entropy(const RelativeVarianceProfile& profile, double log_base);

WeightVector Icw(const EntropyVector& entropies,
                 const EngineConfig& config = {});

// Columnwise (q + eps) / (1 + M eps).
Matrix<double> SmoothPrior(const Matrix<double>& q, double epsilon);

// D(p || q) per attribute in config.kld_log_base, with the prior smoothed
// by config.prior_smoothing_epsilon first.
DivergenceVector Kld(const RelativeVarianceProfile& profile,
                     const PriorProfile& prior, const EngineConfig& config);

WeightVector Ighw(const DivergenceVector& divergences,
                  const EngineConfig& config = {});

// Requires at least two attributes. Negative entries raise kNegativeIgd, or
// are shifted by the minimum under IgdNegativePolicy::kMinShift.
IgdVector Igd(const EntropyVector& entropies, const EngineConfig& config);

WeightVector Igdw(const IgdVector& igd, const EngineConfig& config = {});

}  // namespace infoweight
