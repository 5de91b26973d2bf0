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

#include "infoweight/moments.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace infoweight {

PairMoments ComputePairMoments(std::span<const double> values) {
  assert(values.size() >= 2);
  const double n = static_cast<double>(values.size());

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;

  // The residual sum of deviations absorbs the rounding error of `mean`.
  double sq = 0.0;
  double resid = 0.0;
  for (double v : values) {
    const double d = v - mean;
    sq += d * d;
    resid += d;
  }
  const double variance = (sq - resid * resid / n) / (n - 1.0);
  return {mean, std::max(variance, 0.0)};
}

MomentMatrices ComputeMoments(const SampleSet& samples) {
  const std::size_t num_alt = samples.num_alternatives();
  const std::size_t num_attr = samples.num_attributes();

  MomentMatrices out{samples.alternatives(), samples.attributes(),
                     Matrix<double>(num_alt, num_attr),
                     Matrix<double>(num_alt, num_attr),
                     Matrix<std::size_t>(num_alt, num_attr)};

  std::vector<double> buffer;
  for (std::size_t m = 0; m < num_alt; ++m) {
    for (std::size_t r = 0; r < num_attr; ++r) {
      const auto pair = samples.pair(m, r);
      buffer.clear();
      for (const auto& s : pair) buffer.push_back(s.utility);
      const PairMoments pm = ComputePairMoments(buffer);
      out.gamma(m, r) = pm.mean;
      out.lambda(m, r) = pm.variance;
      out.sample_counts(m, r) = pair.size();
    }
  }
  return out;
}

}  // namespace infoweight
