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

#include "infoweight/weighting.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "infoweight/errors.hpp"
#include "oracles.hpp"

namespace infoweight {
namespace {

constexpr double kE = std::numbers::e;

MomentMatrices FromLambda(const std::vector<std::vector<double>>& columns) {
  const std::size_t num_alt = columns.front().size();
  MomentMatrices mom;
  mom.gamma = Matrix<double>(num_alt, columns.size());
  mom.lambda = Matrix<double>(num_alt, columns.size());
  mom.sample_counts = Matrix<std::size_t>(num_alt, columns.size(), 2);
  for (std::size_t m = 0; m < num_alt; ++m) {
    mom.alternatives.push_back("alt" + std::to_string(m));
  }
  for (std::size_t r = 0; r < columns.size(); ++r) {
    mom.attributes.push_back("attr" + std::to_string(r));
    for (std::size_t m = 0; m < num_alt; ++m) mom.lambda(m, r) = columns[r][m];
  }
  return mom;
}

RelativeVarianceProfile Profile(const std::vector<std::vector<double>>& columns) {
  RelativeVarianceProfile out{Matrix<double>(columns.front().size(), columns.size()), {}};
  for (std::size_t r = 0; r < columns.size(); ++r) {
    for (std::size_t m = 0; m < columns[r].size(); ++m) out.p(m, r) = columns[r][m];
  }
  return out;
}

PriorProfile Prior(const std::vector<std::vector<double>>& columns) {
  return PriorProfile{Profile(columns).p, "test"};
}

EngineConfig Base(double kld_base) {
  EngineConfig c;
  c.kld_log_base = kld_base;
  return c;
}

TEST(RelativeVariance, ReferenceColumns) {
  const auto prof = RelativeVariance(FromLambda({{7.0, 2.5}, {1.0, 4.0}}), {});
  EXPECT_NEAR(prof.p(0, 0), 0.7368, 5e-5);
  EXPECT_NEAR(prof.p(1, 0), 0.2632, 5e-5);
  EXPECT_EQ(prof.p(0, 1), 0.2);
  EXPECT_EQ(prof.p(1, 1), 0.8);
}

TEST(RelativeVariance, EqualVariances) {
  const auto prof = RelativeVariance(FromLambda({{3.3, 3.3}}), {});
  EXPECT_EQ(prof.p(0, 0), 0.5);
  EXPECT_EQ(prof.p(1, 0), 0.5);
}

TEST(RelativeVariance, DegenerateAttribute) {
  const MomentMatrices mom = FromLambda({{1.0, 2.0}, {0.0, 0.0}});
  try {
    RelativeVariance(mom, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateAttribute);
    EXPECT_NE(e.detail().find("attr1"), std::string::npos);
  }
  EngineConfig uniform;
  uniform.degenerate_variance_policy = DegenerateVariancePolicy::kUniform;
  const auto prof = RelativeVariance(mom, uniform);
  EXPECT_EQ(prof.p(0, 1), 0.5);
  EXPECT_EQ(prof.p(1, 1), 0.5);
  EXPECT_EQ(prof.warnings.size(), 1u);
}

TEST(Entropy, ReferenceValues) {
  const auto e = Entropy(Profile({{0.7368, 0.2632}, {0.2, 0.8}}), kE);
  EXPECT_NEAR(e.e[0], 0.5763, 5e-4);
  EXPECT_NEAR(e.e[1], 0.5004, 5e-4);
}

TEST(Entropy, DegenerateIsZero) {
  for (double base : {kE, 2.0, 10.0}) {
    EXPECT_EQ(Entropy(Profile({{1.0, 0.0}}), base).e[0], 0.0);
  }
}

TEST(Entropy, UniformBaseTwoIsOne) {
  EXPECT_EQ(Entropy(Profile({{0.5, 0.5}}), 2.0).e[0], 1.0);
}

TEST(Icw, ReferenceWeights) {
  const WeightVector w = Icw({{0.5763, 0.5004}, kE});
  EXPECT_NEAR(w.weights[0], 0.5353, 5e-4);
  EXPECT_NEAR(w.weights[1], 0.4647, 5e-4);
  EXPECT_EQ(w.raw_scores, (std::vector<double>{0.5763, 0.5004}));
  EXPECT_EQ(w.method, Method::kIcw);
}

TEST(Icw, EqualEntropiesGiveUniform) {
  const WeightVector w = Icw({{0.3, 0.3, 0.3, 0.3}, kE});
  for (double x : w.weights) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(Icw, ThreeAttributesAgainstNormalizationOracle) {
  const std::vector<long double> e = {0.6931, 0.0, 0.6931};
  const auto ref = oracle::Normalize(e);
  const WeightVector w = Icw({{0.6931, 0.0, 0.6931}, kE});
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_NEAR(w.weights[r], static_cast<double>(ref[r]), 1e-15);
  }
  EXPECT_EQ(w.weights[0], 0.5);
  EXPECT_EQ(w.weights[1], 0.0);
}

TEST(Icw, AllZeroEntropy) {
  EXPECT_THROW(
      {
        try {
          Icw({{0.0, 0.0}, kE});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kAllZeroEntropy);
          throw;
        }
      },
      Error);
}

TEST(Kld, ReferenceValuesBaseTen) {
  const auto d = Kld(Profile({{7.0 / 9.5, 2.5 / 9.5}, {0.2, 0.8}}),
                     Prior({{0.7, 0.3}, {0.1, 0.9}}), Base(10));
  EXPECT_NEAR(d.d[0], 0.0014, 2e-4);
  EXPECT_NEAR(d.d[1], 0.0193, 2e-4);
}

TEST(Kld, IdenticalDistributionsGiveZero) {
  const auto d = Kld(Profile({{0.3, 0.7}}), Prior({{0.3, 0.7}}), Base(10));
  EXPECT_NEAR(d.d[0], 0.0, 1e-12);
}

TEST(Kld, TermByTermOracleNats) {
  const long double ref = oracle::KldNats({0.6L, 0.4L}, {0.5L, 0.5L});
  const auto d = Kld(Profile({{0.6, 0.4}}), Prior({{0.5, 0.5}}), Base(kE));
  EXPECT_NEAR(d.d[0], static_cast<double>(ref), 1e-15);
  EXPECT_NEAR(d.d[0], 0.020135513550688863, 1e-15);  // frozen oracle value
}

TEST(Kld, ZeroPriorSupport) {
  try {
    Kld(Profile({{0.6, 0.4}}), Prior({{1.0, 0.0}}), Base(10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPriorSupport);
  }
}

TEST(Kld, SmoothingRescuesZeroPrior) {
  EngineConfig c = Base(kE);
  c.prior_smoothing_epsilon = 0.1;
  const auto d = Kld(Profile({{0.6, 0.4}}), Prior({{1.0, 0.0}}), c);
  // q becomes (1.1, 0.1) / 1.2
  const long double ref =
      oracle::KldNats({0.6L, 0.4L}, {1.1L / 1.2L, 0.1L / 1.2L});
  EXPECT_NEAR(d.d[0], static_cast<double>(ref), 1e-14);
}

TEST(Kld, ZeroDataMassIgnoresZeroPrior) {
  const auto d = Kld(Profile({{1.0, 0.0}}), Prior({{1.0, 0.0}}), Base(10));
  EXPECT_EQ(d.d[0], 0.0);
}

TEST(Kld, ShapeMismatch) {
  EXPECT_THROW(Kld(Profile({{0.5, 0.5}}), Prior({{0.5, 0.5}, {0.5, 0.5}}), Base(10)),
               Error);
}

TEST(Ighw, ReferenceWeightsFromUnroundedDivergences) {
  const auto d = Kld(Profile({{7.0 / 9.5, 2.5 / 9.5}, {0.2, 0.8}}),
                     Prior({{0.7, 0.3}, {0.1, 0.9}}), Base(10));
  const WeightVector w = Ighw(d);
  EXPECT_NEAR(w.weights[0], 0.0694, 5e-4);
  EXPECT_NEAR(w.weights[1], 0.9306, 5e-4);
}

TEST(Ighw, SymmetricAndOracle) {
  const WeightVector sym = Ighw({{0.02, 0.02}, 10});
  EXPECT_EQ(sym.weights, (std::vector<double>{0.5, 0.5}));
  const WeightVector w = Ighw({{0.01, 0.02, 0.07}, 10});
  const auto ref = oracle::Normalize({0.01L, 0.02L, 0.07L});
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_NEAR(w.weights[r], static_cast<double>(ref[r]), 1e-15);
  }
  EXPECT_NEAR(w.weights[2], 0.7, 1e-15);
}

TEST(Ighw, AllZeroDivergence) {
  try {
    Ighw({{0.0, 0.0}, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllZeroDivergence);
  }
}

TEST(Igd, ReferenceValues) {
  const IgdVector g = Igd({{0.5763, 0.5004}, kE}, {});
  EXPECT_NEAR(g.raw[0], 0.0767, 5e-4);
  EXPECT_NEAR(g.raw[1], 0.0767, 5e-4);
  EXPECT_EQ(g.resolution, IgdResolution::kRaw);
}

TEST(Igd, TwoAttributeIdentity) {
  for (double a : {0.1, 0.55, 0.9}) {
    for (double b : {0.3, 0.61, 0.95}) {
      const IgdVector g = Igd({{a, b}, kE}, {.igd_negative_policy = IgdNegativePolicy::kMinShift});
      EXPECT_EQ(g.raw[0], g.raw[1]);
      EXPECT_NEAR(g.raw[0], a + b - 1.0, 1e-15);
    }
  }
}

TEST(Igd, ThreeAttributesNegativeStrict) {
  const std::vector<long double> e = {1.0986L, 0.2L, 0.2L};
  const auto ref = oracle::IgdTermByTerm(e);
  ASSERT_LT(ref[0], 0);
  try {
    Igd({{1.0986, 0.2, 0.2}, kE}, {});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNegativeIgd);
  }
}

TEST(Igd, ThreeAttributesMinShift) {
  EngineConfig c;
  c.igd_negative_policy = IgdNegativePolicy::kMinShift;
  const std::vector<long double> e = {1.0986L, 0.2L, 0.2L};
  const auto ref = oracle::IgdTermByTerm(e);
  const IgdVector g = Igd({{1.0986, 0.2, 0.2}, kE}, c);
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_NEAR(g.raw[r], static_cast<double>(ref[r]), 1e-12);
    EXPECT_NEAR(g.raw[r], -0.5014, 1e-12);  // frozen oracle value
  }
  // Every raw entry equal: resolution falls back to 1/R.
  EXPECT_EQ(g.resolution, IgdResolution::kMinShifted);
  for (double x : g.g) EXPECT_DOUBLE_EQ(x, 1.0 / 3.0);
  const WeightVector w = Igdw(g, c);
  for (double x : w.weights) EXPECT_NEAR(x, 1.0 / 3.0, 1e-15);
}

TEST(Igdw, NormalizesShiftedVector) {
  IgdVector g;
  g.raw = {-0.2, 0.1, 0.3};
  g.g = {0.0, 0.3, 0.5};
  g.resolution = IgdResolution::kMinShifted;
  const WeightVector w = Igdw(g);
  EXPECT_EQ(w.weights[0], 0.0);
  EXPECT_NEAR(w.weights[1], 0.375, 1e-15);
  EXPECT_NEAR(w.weights[2], 0.625, 1e-15);
  EXPECT_EQ(w.raw_scores, g.g);
}

TEST(Igd, RequiresTwoAttributes) {
  EXPECT_THROW(Igd({{0.5}, kE}, {}), Error);
}

TEST(Igdw, ReferenceAndNormalization) {
  EXPECT_EQ(Igdw({{0.0767, 0.0767}, {0.0767, 0.0767}, IgdResolution::kRaw}).weights,
            (std::vector<double>{0.5, 0.5}));
  const WeightVector w = Igdw({{0.1, 0.3}, {0.1, 0.3}, IgdResolution::kRaw});
  const auto ref = oracle::Normalize({0.1L, 0.3L});
  EXPECT_NEAR(w.weights[0], static_cast<double>(ref[0]), 1e-15);
  EXPECT_NEAR(w.weights[0], 0.25, 1e-15);
  EXPECT_NEAR(w.weights[1], 0.75, 1e-15);
}

TEST(Igdw, ZeroSum) {
  try {
    Igdw({{0.0, 0.0}, {0.0, 0.0}, IgdResolution::kRaw});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroIgdSum);
  }
}

TEST(Igdw, AnyTwoAttributeInputIsHalfHalf) {
  for (double a = 0.55; a < 1.0; a += 0.05) {
    for (double b = 0.5; b < 1.0; b += 0.07) {
      const IgdVector g = Igd({{a, b}, kE}, {});
      EXPECT_EQ(Igdw(g).weights, (std::vector<double>{0.5, 0.5}));
    }
  }
}

TEST(Igh, MonotoneAlongSimplexForTwoAlternatives) {
  for (double q0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const PriorProfile prior = Prior({{q0, 1.0 - q0}});
    double previous = -1.0;
    for (double p0 = q0; p0 <= 0.999; p0 += 0.01) {
      const double d = Kld(Profile({{p0, 1.0 - p0}}), prior, Base(10)).d[0];
      EXPECT_GT(d, previous) << "q0=" << q0 << " p0=" << p0;
      previous = d;
    }
    previous = -1.0;
    for (double p0 = q0; p0 >= 0.001; p0 -= 0.01) {
      const double d = Kld(Profile({{p0, 1.0 - p0}}), prior, Base(10)).d[0];
      EXPECT_GT(d, previous) << "q0=" << q0 << " p0=" << p0;
      previous = d;
    }
  }
}

}  // namespace
}  // namespace infoweight
