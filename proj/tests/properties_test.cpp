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

// Randomized property checks. Each suite draws kCases instances with up to
// six alternatives and five attributes from a fixed seed.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "infoweight/moments.hpp"
#include "infoweight/ranking.hpp"
#include "infoweight/weighting.hpp"
#include "oracles.hpp"

namespace infoweight {
namespace {

constexpr int kCases = 250;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::size_t Size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  // Log-uniform positive value, so tiny and large variances both appear.
  double Positive() { return std::exp(Uniform(std::log(1e-4), std::log(1e2))); }

  MomentMatrices Moments(std::size_t m, std::size_t r) {
    MomentMatrices out;
    for (std::size_t i = 0; i < m; ++i) out.alternatives.push_back("a" + std::to_string(i));
    for (std::size_t j = 0; j < r; ++j) out.attributes.push_back("r" + std::to_string(j));
    out.gamma = Matrix<double>(m, r);
    out.lambda = Matrix<double>(m, r);
    out.sample_counts = Matrix<std::size_t>(m, r, 10);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        out.gamma(i, j) = Uniform(0.0, 1.0);
        out.lambda(i, j) = Positive();
      }
    }
    return out;
  }

  MomentMatrices Moments() { return Moments(Size(2, 6), Size(1, 5)); }

  PriorProfile Prior(const MomentMatrices& mm) {
    Matrix<double> q(mm.num_alternatives(), mm.num_attributes());
    for (std::size_t j = 0; j < q.cols(); ++j) {
      double total = 0;
      for (std::size_t i = 0; i < q.rows(); ++i) total += q(i, j) = Positive();
      for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) /= total;
    }
    return ValidatePrior(q, mm.attributes, mm.num_alternatives());
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

std::vector<double> IcwWeights(const MomentMatrices& mm, const EngineConfig& config = {}) {
  return Icw(Entropy(RelativeVariance(mm, config), config.entropy_log_base), config).weights;
}

std::vector<double> IghwWeights(const MomentMatrices& mm, const PriorProfile& prior,
                                const EngineConfig& config = {}) {
  return Ighw(Kld(RelativeVariance(mm, config), prior, config), config).weights;
}

TEST(Properties, WeightVectorsSumToOne) {
  Gen gen(1);
  EngineConfig config;
  config.igd_negative_policy = IgdNegativePolicy::kMinShift;
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    EXPECT_NEAR(Sum(IcwWeights(mm)), 1.0, 1e-9);
    EXPECT_NEAR(Sum(IghwWeights(mm, gen.Prior(mm))), 1.0, 1e-9);
    if (mm.num_attributes() >= 2) {
      const auto e = Entropy(RelativeVariance(mm, config), config.entropy_log_base);
      EXPECT_NEAR(Sum(Igdw(Igd(e, config), config).weights), 1.0, 1e-9);
    }
  }
}

TEST(Properties, KldNonNegativeAndZeroOnlyAtPrior) {
  Gen gen(2);
  const EngineConfig config;
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    const auto profile = RelativeVariance(mm, config);
    for (double d : Kld(profile, gen.Prior(mm), config).d) {
      EXPECT_GE(d, -1e-12);
      EXPECT_GT(d, 0.0);  // a random prior differs from p almost surely
    }
    const PriorProfile same =
        ValidatePrior(profile.p, mm.attributes, mm.num_alternatives());
    for (double d : Kld(profile, same, config).d) EXPECT_NEAR(d, 0.0, 1e-12);
  }
}

TEST(Properties, EntropyWithinBounds) {
  Gen gen(3);
  const EngineConfig config;
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    const double bound = std::log(static_cast<double>(mm.num_alternatives()));
    for (double e : Entropy(RelativeVariance(mm, config), std::numbers::e).e) {
      EXPECT_GE(e, 0.0);
      EXPECT_LE(e, bound + 1e-12);
    }
  }
}

TEST(Properties, WeightsInvariantToPerAttributeVarianceScale) {
  Gen gen(4);
  for (int c = 0; c < kCases; ++c) {
    MomentMatrices mm = gen.Moments();
    const PriorProfile prior = gen.Prior(mm);
    const auto icw = IcwWeights(mm);
    const auto ighw = IghwWeights(mm, prior);
    for (std::size_t j = 0; j < mm.num_attributes(); ++j) {
      const double k = std::exp(gen.Uniform(std::log(1e-3), std::log(1e3)));
      for (std::size_t i = 0; i < mm.num_alternatives(); ++i) mm.lambda(i, j) *= k;
    }
    const auto icw2 = IcwWeights(mm);
    const auto ighw2 = IghwWeights(mm, prior);
    for (std::size_t j = 0; j < icw.size(); ++j) {
      EXPECT_NEAR(icw[j], icw2[j], 1e-10);
      EXPECT_NEAR(ighw[j], ighw2[j], 1e-10);
    }
  }
}

TEST(Properties, MomentsMatchTwoPassOracle) {
  Gen gen(5);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = gen.Size(2, 400);
    const double offset = gen.Uniform(-1e3, 1e3);
    const double spread = gen.Positive();
    std::vector<double> xs(n);
    for (double& x : xs) x = offset + spread * gen.Uniform(-1.0, 1.0);
    const PairMoments got = ComputePairMoments(xs);
    const oracle::Moments want = oracle::TwoPass(xs);
    EXPECT_NEAR(got.mean, static_cast<double>(want.mean),
                1e-12 * std::abs(static_cast<double>(want.mean)));
    EXPECT_NEAR(got.variance, static_cast<double>(want.variance),
                1e-12 * static_cast<double>(want.variance));
  }
}

TEST(Properties, RankingInvariantToPositiveWeightScale) {
  Gen gen(6);
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    WeightVector w;
    w.weights = IcwWeights(mm);
    WeightVector scaled = w;
    const double k = gen.Uniform(0.01, 100.0);
    for (double& x : scaled.weights) x *= k;
    const auto base = Rank(ExpectedUtility(mm, w, std::nullopt), mm.alternatives);
    const auto after = Rank(ExpectedUtility(mm, scaled, std::nullopt), mm.alternatives);
    EXPECT_EQ(base.ranks, after.ranks);
    EXPECT_EQ(base.order.front(), after.order.front());
  }
}

TEST(Properties, WeightsInvariantToLogBase) {
  Gen gen(7);
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    const PriorProfile prior = gen.Prior(mm);
    EngineConfig other;
    other.entropy_log_base = gen.Uniform(1.5, 20.0);
    other.kld_log_base = gen.Uniform(1.5, 20.0);
    const auto icw = IcwWeights(mm);
    const auto icw2 = IcwWeights(mm, other);
    const auto ighw = IghwWeights(mm, prior);
    const auto ighw2 = IghwWeights(mm, prior, other);
    for (std::size_t j = 0; j < icw.size(); ++j) {
      EXPECT_NEAR(icw[j], icw2[j], 1e-12);
      EXPECT_NEAR(ighw[j], ighw2[j], 1e-12);
    }
  }
}

TEST(Properties, WeightsInvariantToAlternativeOrder) {
  Gen gen(8);
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments();
    std::vector<std::size_t> perm(mm.num_alternatives());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    MomentMatrices shuffled = mm;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j < mm.num_attributes(); ++j) {
        shuffled.lambda(i, j) = mm.lambda(perm[i], j);
        shuffled.gamma(i, j) = mm.gamma(perm[i], j);
      }
    }
    const auto a = IcwWeights(mm);
    const auto b = IcwWeights(shuffled);
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j], b[j], 1e-12);
  }
}

TEST(Properties, IgdMatchesTermByTermOracle) {
  Gen gen(9);
  EngineConfig config;
  config.igd_negative_policy = IgdNegativePolicy::kMinShift;
  for (int c = 0; c < kCases; ++c) {
    const MomentMatrices mm = gen.Moments(gen.Size(2, 6), gen.Size(2, 5));
    const auto e = Entropy(RelativeVariance(mm, config), config.entropy_log_base);
    const auto oracle = oracle::IgdTermByTerm({e.e.begin(), e.e.end()});
    const IgdVector igd = Igd(e, config);
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      EXPECT_NEAR(igd.raw[j], static_cast<double>(oracle[j]), 1e-12);
    }
  }
}

}  // namespace
}  // namespace infoweight
