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

#include "infoweight/model.hpp"

namespace infoweight {

// Expectations closer than this are ranked as a tie.
inline constexpr double kTieTolerance = 1e-9;

// Rounds half away from zero to `decimals` places.
double RoundHalfAwayFromZero(double value, int decimals);

// E(m) = sum_r w(r) gamma(m, r). With `rounding`, each weight is first
// rounded to that many decimals.
std::vector<double> ExpectedUtility(const MomentMatrices& moments,
                                    const WeightVector& weights,
                                    std::optional<int> rounding);

struct Ranking {
  // ranks[m] for alternative m; 1 is best. Tied alternatives share the
  // smaller rank and the following rank values are skipped.
  std::vector<int> ranks;
  // Alternative indices best first; ties ordered by identifier.
  std::vector<std::size_t> order;
  // Groups of tied alternative indices, each in display order.
  std::vector<std::vector<std::size_t>> ties;
};

// Ranks descending by expectation. `identifiers` (one per alternative) break
// display order within a tie; the tie itself is always reported.
Ranking Rank(std::span<const double> expectations,
             std::span<const std::string> identifiers);

struct RankingReport {
  Method method = Method::kIcw;
  std::vector<double> expectations;
  std::vector<int> ranks;
  std::vector<std::size_t> order;
  std::vector<double> weights_used;
  std::optional<int> rounding_applied;
  std::vector<std::vector<std::size_t>> ties;
};

RankingReport BuildRankingReport(const MomentMatrices& moments,
                                 const WeightVector& weights,
                                 std::optional<int> rounding);

}  // namespace infoweight
