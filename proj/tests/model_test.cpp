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

#include "infoweight/model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "infoweight/errors.hpp"

namespace infoweight {
namespace {

std::vector<UtilitySample> Grid(std::size_t alts, std::size_t attrs,
                                std::size_t situations) {
  std::vector<UtilitySample> out;
  for (std::size_t m = 0; m < alts; ++m) {
    for (std::size_t r = 0; r < attrs; ++r) {
      for (std::size_t s = 0; s < situations; ++s) {
        out.push_back({"alt" + std::to_string(m), "attr" + std::to_string(r),
                       "s" + std::to_string(1000 + s),
                       0.01 * static_cast<double>((m * 7 + r * 3 + s) % 100)});
      }
    }
  }
  return out;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(ValidateSampleSet, UseCaseShape) {
  const SampleSet set = ValidateSampleSet(Grid(2, 2, 300));
  EXPECT_EQ(set.samples().size(), 1200u);
  EXPECT_EQ(set.num_alternatives(), 2u);
  EXPECT_EQ(set.num_attributes(), 2u);
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(set.pair(m, r).size(), 300u);
  }
}

TEST(ValidateSampleSet, EmptyInput) {
  EXPECT_EQ(CodeOf([] { ValidateSampleSet({}); }), ErrorCode::kEmptyInput);
}

TEST(ValidateSampleSet, DuplicateTriple) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 0.1}, {"A", "X", "1", 0.2},
                                    {"A", "X", "2", 0.3}};
  EXPECT_EQ(CodeOf([&] { ValidateSampleSet(raw); }), ErrorCode::kDuplicateTriple);
}

TEST(ValidateSampleSet, InsufficientSamples) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 0.1}, {"A", "X", "2", 0.2},
                                    {"A", "Y", "1", 0.3}};
  EXPECT_EQ(CodeOf([&] { ValidateSampleSet(raw); }),
            ErrorCode::kInsufficientSamples);
}

TEST(ValidateSampleSet, MissingPairCountsAsInsufficient) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 0.1}, {"A", "X", "2", 0.2},
                                    {"B", "Y", "1", 0.3}, {"B", "Y", "2", 0.3}};
  EXPECT_EQ(CodeOf([&] { ValidateSampleSet(raw); }),
            ErrorCode::kInsufficientSamples);
}

TEST(ValidateSampleSet, NonFiniteUtility) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 0.1},
                                    {"A", "X", "2", std::nan("")}};
  EXPECT_EQ(CodeOf([&] { ValidateSampleSet(raw); }), ErrorCode::kNonFiniteUtility);
  raw[1].utility = INFINITY;
  EXPECT_EQ(CodeOf([&] { ValidateSampleSet(raw); }), ErrorCode::kNonFiniteUtility);
}

TEST(ValidateSampleSet, RaggedCountsAccepted) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 0.1}, {"A", "X", "2", 0.2},
                                    {"A", "X", "3", 0.4}, {"B", "X", "1", 0.3},
                                    {"B", "X", "2", 0.5}};
  const SampleSet set = ValidateSampleSet(raw);
  EXPECT_EQ(set.pair(0, 0).size(), 3u);
  EXPECT_EQ(set.pair(1, 0).size(), 2u);
}

TEST(ValidateSampleSet, WarnsOutsideUnitInterval) {
  std::vector<UtilitySample> raw = {{"A", "X", "1", 15.0}, {"A", "X", "2", 0.5}};
  const SampleSet set = ValidateSampleSet(raw);
  ASSERT_EQ(set.warnings().size(), 1u);
  EXPECT_NE(set.warnings()[0].find("1 utilities"), std::string::npos);
  EXPECT_TRUE(ValidateSampleSet({{"A", "X", "1", 0.0}, {"A", "X", "2", 1.0}})
                  .warnings()
                  .empty());
}

TEST(ValidateSampleSet, LexicographicLayout) {
  std::vector<UtilitySample> raw = {{"b", "y", "2", 1}, {"a", "y", "1", 2},
                                    {"b", "x", "1", 3}, {"a", "x", "2", 4},
                                    {"a", "x", "1", 5}, {"b", "y", "1", 6},
                                    {"a", "y", "2", 7}, {"b", "x", "2", 8}};
  const SampleSet set = ValidateSampleSet(raw);
  EXPECT_EQ(set.alternatives(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(set.attributes(), (std::vector<std::string>{"x", "y"}));
  const auto pair = set.pair(0, 0);
  EXPECT_EQ(pair[0].situation, "1");
  EXPECT_EQ(pair[0].utility, 5);
  EXPECT_EQ(pair[1].utility, 4);
}

TEST(ValidateSampleSet, IdempotentAndOrderIndependent) {
  std::vector<UtilitySample> raw = Grid(3, 4, 7);
  const SampleSet first = ValidateSampleSet(raw);
  EXPECT_EQ(ValidateSampleSet(first.samples()), first);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(raw.begin(), raw.end(), rng);
    EXPECT_EQ(ValidateSampleSet(raw), first);
  }
}

SampleSet TwoByTwo() { return ValidateSampleSet(Grid(2, 2, 3)); }

Matrix<double> Prior(double a, double b, double c, double d) {
  Matrix<double> q(2, 2);
  q(0, 0) = a;
  q(1, 0) = b;
  q(0, 1) = c;
  q(1, 1) = d;
  return q;
}

TEST(ValidatePrior, UseCasePrior) {
  const PriorProfile prior = ValidatePrior(Prior(0.7, 0.3, 0.1, 0.9), TwoByTwo());
  EXPECT_EQ(prior.q(0, 0), 0.7);
  EXPECT_EQ(prior.q(1, 1), 0.9);
}

TEST(ValidatePrior, UniformPrior) {
  EXPECT_NO_THROW(ValidatePrior(Prior(0.5, 0.5, 0.5, 0.5), TwoByTwo()));
}

TEST(ValidatePrior, ColumnNotNormalized) {
  try {
    ValidatePrior(Prior(0.7, 0.2, 0.1, 0.9), TwoByTwo());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kColumnNotNormalized);
    EXPECT_NE(e.detail().find("attr0"), std::string::npos);
    EXPECT_NE(e.detail().find("0.9"), std::string::npos);
  }
}

TEST(ValidatePrior, NegativeEntry) {
  EXPECT_EQ(CodeOf([] { ValidatePrior(Prior(1.2, -0.2, 0.1, 0.9), TwoByTwo()); }),
            ErrorCode::kNegativeEntry);
}

TEST(ValidatePrior, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] { ValidatePrior(Matrix<double>(3, 2, 1.0 / 3), TwoByTwo()); }),
            ErrorCode::kDimensionMismatch);
}

TEST(EngineConfig, Validation) {
  EXPECT_NO_THROW(EngineConfig{}.Validate());
  EngineConfig c;
  c.entropy_log_base = 1.0;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidConfig);
  c = {};
  c.kld_log_base = 0.5;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidConfig);
  c = {};
  c.prior_smoothing_epsilon = 1.0;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidConfig);
  c = {};
  c.report_weight_rounding = -1;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidConfig);
}

TEST(Method, ParseIsCaseInsensitive) {
  EXPECT_EQ(ParseMethod("icw"), Method::kIcw);
  EXPECT_EQ(ParseMethod("IGHW"), Method::kIghw);
  EXPECT_EQ(ParseMethod("IgDw"), Method::kIgdw);
  EXPECT_FALSE(ParseMethod("ahp"));
}

TEST(ErrorCodes, ExitStatusContract) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kParseError), 2);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNegativeIgd), 2);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kReproductionMismatch), 3);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kIoError), 4);
}

}  // namespace
}  // namespace infoweight
