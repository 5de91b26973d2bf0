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

#include "infoweight/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infoweight/errors.hpp"

namespace infoweight {

double RoundHalfAwayFromZero(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::vector<double> ExpectedUtility(const MomentMatrices& moments,
                                    const WeightVector& weights,
                                    std::optional<int> rounding) {
  const std::size_t num_attr = moments.num_attributes();
  if (weights.weights.size() != num_attr) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(weights.weights.size()) + " weights for " +
                    std::to_string(num_attr) + " attributes");
  }
  std::vector<double> w = weights.weights;
  if (rounding) {
    for (double& x : w) x = RoundHalfAwayFromZero(x, *rounding);
  }

  std::vector<double> out(moments.num_alternatives(), 0.0);
  for (std::size_t m = 0; m < out.size(); ++m) {
    for (std::size_t r = 0; r < num_attr; ++r) {
      out[m] += w[r] * moments.gamma(m, r);
    }
  }
  return out;
}

Ranking Rank(std::span<const double> expectations,
             std::span<const std::string> identifiers) {
  const std::size_t n = expectations.size();
  Ranking out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  auto id = [&](std::size_t i) -> const std::string& { return identifiers[i]; };

  // Coarse order by value; ties are then regrouped and re-sorted by id.
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (expectations[a] != expectations[b]) {
                       return expectations[a] > expectations[b];
                     }
                     return id(a) < id(b);
                   });

  out.ranks.assign(n, 0);
  std::size_t start = 0;
  while (start < n) {
    const double lead = expectations[out.order[start]];
    std::size_t end = start + 1;
    while (end < n && lead - expectations[out.order[end]] <= kTieTolerance) {
      ++end;
    }
    std::sort(out.order.begin() + start, out.order.begin() + end,
              [&](std::size_t a, std::size_t b) { return id(a) < id(b); });
    for (std::size_t k = start; k < end; ++k) {
      out.ranks[out.order[k]] = static_cast<int>(start) + 1;
    }
    if (end - start > 1) {
      out.ties.emplace_back(out.order.begin() + start, out.order.begin() + end);
    }
    start = end;
  }
  return out;
}

RankingReport BuildRankingReport(const MomentMatrices& moments,
                                 const WeightVector& weights,
                                 std::optional<int> rounding) {
  RankingReport report;
  report.method = weights.method;
  report.expectations = ExpectedUtility(moments, weights, rounding);
  Ranking ranking = Rank(report.expectations, moments.alternatives);
  report.ranks = std::move(ranking.ranks);
  report.order = std::move(ranking.order);
  report.ties = std::move(ranking.ties);
  report.weights_used = weights.weights;
  if (rounding) {
    for (double& w : report.weights_used) w = RoundHalfAwayFromZero(w, *rounding);
  }
  report.rounding_applied = rounding;
  return report;
}

}  // namespace infoweight
