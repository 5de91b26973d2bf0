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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <tuple>

#include "infoweight/errors.hpp"

namespace infoweight {
namespace {

std::string TripleName(const UtilitySample& s) {
  return "(" + s.alternative + ", " + s.attribute + ", " + s.situation + ")";
}

}  // namespace

std::span<const UtilitySample> SampleSet::pair(std::size_t alternative,
                                               std::size_t attribute) const {
  const std::size_t idx = alternative * attributes_.size() + attribute;
  return std::span<const UtilitySample>(samples_).subspan(
      offsets_[idx], offsets_[idx + 1] - offsets_[idx]);
}

SampleSet ValidateSampleSet(std::vector<UtilitySample> raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");

  std::size_t out_of_range = 0;
  for (const auto& s : raw) {
    if (s.alternative.empty() || s.attribute.empty() || s.situation.empty()) {
      throw Error(ErrorCode::kParseError,
                  "empty identifier in sample " + TripleName(s));
    }
    if (!std::isfinite(s.utility)) {
      throw Error(ErrorCode::kNonFiniteUtility, TripleName(s));
    }
    if (s.utility < 0.0 || s.utility > 1.0) ++out_of_range;
  }

  auto key = [](const UtilitySample& s) {
    return std::tie(s.alternative, s.attribute, s.situation);
  };
  std::sort(raw.begin(), raw.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  auto dup = std::adjacent_find(raw.begin(), raw.end(), [&](const auto& a,
                                                            const auto& b) {
    return key(a) == key(b);
  });
  if (dup != raw.end()) {
    throw Error(ErrorCode::kDuplicateTriple, TripleName(*dup));
  }

  SampleSet set;
  for (const auto& s : raw) {
    set.alternatives_.push_back(s.alternative);
    set.attributes_.push_back(s.attribute);
  }
  for (auto* ids : {&set.alternatives_, &set.attributes_}) {
    std::sort(ids->begin(), ids->end());
    ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
  }

  const std::size_t num_alt = set.alternatives_.size();
  const std::size_t num_attr = set.attributes_.size();
  std::vector<std::size_t> counts(num_alt * num_attr, 0);
  for (const auto& s : raw) {
    const auto m = std::lower_bound(set.alternatives_.begin(),
                                    set.alternatives_.end(), s.alternative) -
                   set.alternatives_.begin();
    const auto r = std::lower_bound(set.attributes_.begin(),
                                    set.attributes_.end(), s.attribute) -
                   set.attributes_.begin();
    ++counts[m * num_attr + r];
  }
  set.offsets_.assign(1, 0);
  for (std::size_t m = 0; m < num_alt; ++m) {
    for (std::size_t r = 0; r < num_attr; ++r) {
      const std::size_t n = counts[m * num_attr + r];
      if (n < 2) {
        throw Error(ErrorCode::kInsufficientSamples,
                    "pair (" + set.alternatives_[m] + ", " +
                        set.attributes_[r] + ") has " + std::to_string(n) +
                        " sample(s); at least 2 required");
      }
      set.offsets_.push_back(set.offsets_.back() + n);
    }
  }

  if (out_of_range > 0) {
    set.warnings_.push_back(std::to_string(out_of_range) +
                            " utilities lie outside [0, 1]");
  }
  set.samples_ = std::move(raw);
  return set;
}

PriorProfile ValidatePrior(const Matrix<double>& raw, const SampleSet& samples,
                           std::string source_label) {
  return ValidatePrior(raw, samples.attributes(), samples.num_alternatives(),
                       std::move(source_label));
}

PriorProfile ValidatePrior(const Matrix<double>& raw,
                           std::span<const std::string> attributes,
                           std::size_t num_alternatives,
                           std::string source_label) {
  if (!raw.SameShape(num_alternatives, attributes.size())) {
    std::ostringstream msg;
    msg << "prior is " << raw.rows() << "x" << raw.cols() << ", expected "
        << num_alternatives << "x" << attributes.size();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  for (std::size_t r = 0; r < raw.cols(); ++r) {
    double sum = 0.0;
    for (std::size_t m = 0; m < raw.rows(); ++m) {
      const double v = raw(m, r);
      if (v < 0.0) {
        throw Error(ErrorCode::kNegativeEntry,
                    "attribute " + attributes[r] + " row " + std::to_string(m));
      }
      sum += v;
    }
    if (!(std::abs(sum - 1.0) <= kColumnSumTolerance)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << attributes[r] << " sums to " << sum;
      throw Error(ErrorCode::kColumnNotNormalized, msg.str());
    }
  }
  return PriorProfile{raw, std::move(source_label)};
}

std::string_view ToString(Method method) {
  switch (method) {
    case Method::kIcw: return "ICW";
    case Method::kIghw: return "IGHW";
    case Method::kIgdw: return "IGDW";
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Method m : kAllMethods) {
    if (upper == ToString(m)) return m;
  }
  return std::nullopt;
}

std::string_view ToString(DegenerateVariancePolicy policy) {
  return policy == DegenerateVariancePolicy::kError ? "error" : "uniform";
}

std::string_view ToString(IgdNegativePolicy policy) {
  return policy == IgdNegativePolicy::kError ? "error" : "min_shift";
}

std::optional<DegenerateVariancePolicy> ParseDegenerateVariancePolicy(
    std::string_view text) {
  if (text == "error") return DegenerateVariancePolicy::kError;
  if (text == "uniform") return DegenerateVariancePolicy::kUniform;
  return std::nullopt;
}

std::optional<IgdNegativePolicy> ParseIgdNegativePolicy(std::string_view text) {
  if (text == "error") return IgdNegativePolicy::kError;
  if (text == "min_shift") return IgdNegativePolicy::kMinShift;
  return std::nullopt;
}

void EngineConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (!(entropy_log_base > 1.0) || !std::isfinite(entropy_log_base)) {
    fail("entropy_log_base must be a finite number > 1");
  }
  if (!(kld_log_base > 1.0) || !std::isfinite(kld_log_base)) {
    fail("kld_log_base must be a finite number > 1");
  }
  if (!(prior_smoothing_epsilon >= 0.0 && prior_smoothing_epsilon < 1.0)) {
    fail("prior_smoothing_epsilon must lie in [0, 1)");
  }
  if (report_weight_rounding && (*report_weight_rounding < 0 ||
                                 *report_weight_rounding > 15)) {
    fail("report_weight_rounding must lie in [0, 15]");
  }
}

}  // namespace infoweight
