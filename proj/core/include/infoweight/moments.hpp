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

#include <span>

#include "infoweight/model.hpp"

namespace infoweight {

struct PairMoments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased, denominator n - 1
};

// Corrected two-pass mean and unbiased variance over `values` taken in the
// given order. Requires at least two values. The variance is clamped at 0.
PairMoments ComputePairMoments(std::span<const double> values);

// Gamma (means) and lambda (unbiased variances) for every pair, summed in
// the set's canonical situation order.
MomentMatrices ComputeMoments(const SampleSet& samples);

}  // namespace infoweight
