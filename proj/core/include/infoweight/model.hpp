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

// Core domain types: utility samples, moment matrices, probability profiles
// over alternatives, weight vectors and the engine configuration.

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infoweight {

// Dense row-major matrix indexed (alternative, attribute).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::span<const T> data() const noexcept { return data_; }

  bool SameShape(std::size_t rows, std::size_t cols) const noexcept {
    return rows_ == rows && cols_ == cols;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct UtilitySample {
  std::string alternative;
  std::string attribute;
  std::string situation;
  double utility = 0.0;

  friend bool operator==(const UtilitySample&, const UtilitySample&) = default;
};

// A validated, canonically ordered collection of utility samples.
//
// Samples are sorted by (alternative, attribute, situation) with all three
// identifiers compared lexicographically, so the samples of pair (m, r)
// occupy one contiguous run, itself sorted by situation.
class SampleSet {
 public:
  const std::vector<UtilitySample>& samples() const noexcept { return samples_; }
  const std::vector<std::string>& alternatives() const noexcept {
    return alternatives_;
  }
  const std::vector<std::string>& attributes() const noexcept {
    return attributes_;
  }
  std::size_t num_alternatives() const noexcept { return alternatives_.size(); }
  std::size_t num_attributes() const noexcept { return attributes_.size(); }

  // Samples of one (alternative, attribute) pair, ordered by situation.
  std::span<const UtilitySample> pair(std::size_t alternative,
                                      std::size_t attribute) const;

  // Non-fatal findings, e.g. utilities outside [0, 1].
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend bool operator==(const SampleSet& a, const SampleSet& b) {
    return a.samples_ == b.samples_ && a.alternatives_ == b.alternatives_ &&
           a.attributes_ == b.attributes_;
  }

 private:
  friend SampleSet ValidateSampleSet(std::vector<UtilitySample> raw);

  std::vector<UtilitySample> samples_;
  std::vector<std::string> alternatives_;
  std::vector<std::string> attributes_;
  // offsets_[m * R + r] .. offsets_[m * R + r + 1] bounds pair (m, r).
  std::vector<std::size_t> offsets_;
  std::vector<std::string> warnings_;
};

// Validates raw samples and lays them out canonically. Every
// (alternative, attribute) combination must be observed in at least two
// situations.
SampleSet ValidateSampleSet(std::vector<UtilitySample> raw);

// Means (gamma), unbiased variances (lambda) and counts per pair.
struct MomentMatrices {
  std::vector<std::string> alternatives;
  std::vector<std::string> attributes;
  Matrix<double> gamma;
  Matrix<double> lambda;
  Matrix<std::size_t> sample_counts;

  std::size_t num_alternatives() const noexcept { return gamma.rows(); }
  std::size_t num_attributes() const noexcept { return gamma.cols(); }
};

// Λ normalized per attribute into a distribution over alternatives.
struct RelativeVarianceProfile {
  Matrix<double> p;
  std::vector<std::string> warnings;
};

// Subjective per-attribute distribution over alternatives.
struct PriorProfile {
  Matrix<double> q;
  std::string source_label;
};

// Tolerance on the column sums of probability profiles.
inline constexpr double kColumnSumTolerance = 1e-9;

// Checks a raw M x R prior against the sample set's layout. Columns must be
// non-negative and sum to one within kColumnSumTolerance.
PriorProfile ValidatePrior(const Matrix<double>& raw, const SampleSet& samples,
                           std::string source_label = "prior");
PriorProfile ValidatePrior(const Matrix<double>& raw,
                           std::span<const std::string> attributes,
                           std::size_t num_alternatives,
                           std::string source_label = "prior");

enum class Method { kIcw, kIghw, kIgdw };

inline constexpr Method kAllMethods[] = {Method::kIcw, Method::kIghw,
                                         Method::kIgdw};

std::string_view ToString(Method method);
std::optional<Method> ParseMethod(std::string_view text);

enum class DegenerateVariancePolicy { kError, kUniform };
enum class IgdNegativePolicy { kError, kMinShift };

std::string_view ToString(DegenerateVariancePolicy policy);
std::string_view ToString(IgdNegativePolicy policy);
std::optional<DegenerateVariancePolicy> ParseDegenerateVariancePolicy(
    std::string_view text);
std::optional<IgdNegativePolicy> ParseIgdNegativePolicy(std::string_view text);

struct EngineConfig {
  double entropy_log_base = std::numbers::e;
  double kld_log_base = 10.0;
  DegenerateVariancePolicy degenerate_variance_policy =
      DegenerateVariancePolicy::kError;
  double prior_smoothing_epsilon = 0.0;
  IgdNegativePolicy igd_negative_policy = IgdNegativePolicy::kError;
  std::optional<int> report_weight_rounding;

  // Throws Error(kInvalidConfig) when a field is out of range.
  void Validate() const;

  friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

struct WeightVector {
  Method method = Method::kIcw;
  std::vector<double> weights;
  // E(r), IGH(r) or resolved IGD(r) before normalization.
  std::vector<double> raw_scores;
  EngineConfig config_snapshot;
};

}  // namespace infoweight
