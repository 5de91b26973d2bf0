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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "infoweight/errors.hpp"

namespace infoweight {
namespace {

std::string VectorText(std::span<const double> values) {
  std::ostringstream out;
  out.precision(17);
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  out << ")";
  return out.str();
}

WeightVector Normalize(Method method, std::vector<double> scores,
                       const EngineConfig& config, ErrorCode zero_sum_code) {
  const double total = std::accumulate(scores.begin(), scores.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(zero_sum_code, "scores " + VectorText(scores) +
                                   " do not have a positive sum");
  }
  WeightVector out;
  out.method = method;
  out.weights.reserve(scores.size());
  for (double s : scores) out.weights.push_back(s / total);
  out.raw_scores = std::move(scores);
  out.config_snapshot = config;
  return out;
}

}  // namespace

std::string_view ToString(IgdResolution resolution) {
  return resolution == IgdResolution::kRaw ? "raw" : "min_shifted";
}

RelativeVarianceProfile RelativeVariance(const MomentMatrices& moments,
                                         const EngineConfig& config) {
  const std::size_t num_alt = moments.num_alternatives();
  const std::size_t num_attr = moments.num_attributes();
  RelativeVarianceProfile out{Matrix<double>(num_alt, num_attr), {}};

  for (std::size_t r = 0; r < num_attr; ++r) {
    double total = 0.0;
    for (std::size_t m = 0; m < num_alt; ++m) total += moments.lambda(m, r);

    if (total > 0.0) {
      for (std::size_t m = 0; m < num_alt; ++m) {
        out.p(m, r) = moments.lambda(m, r) / total;
      }
      continue;
    }
    const std::string& name = moments.attributes.at(r);
    if (config.degenerate_variance_policy == DegenerateVariancePolicy::kError) {
      throw Error(ErrorCode::kDegenerateAttribute,
                  "attribute " + name + " has zero variance on every alternative");
    }
    for (std::size_t m = 0; m < num_alt; ++m) {
      out.p(m, r) = 1.0 / static_cast<double>(num_alt);
    }
    out.warnings.push_back("attribute " + name +
                           " has zero total variance; using a uniform profile");
  }
  return out;
}

double ShannonEntropy(std::span<const double> distribution, double log_base) {
  double nats = 0.0;
  for (double p : distribution) {
    if (p > 0.0) nats -= p * std::log(p);
  }
  return nats / std::log(log_base);
}

EntropyVector Entropy(const RelativeVarianceProfile& profile, double log_base) {
  EntropyVector out{{}, log_base};
  out.e.reserve(profile.p.cols());
  for (std::size_t r = 0; r < profile.p.cols(); ++r) {
    out.e.push_back(ShannonEntropy(profile.p.column(r), log_base));
  }
  return out;
}

WeightVector Icw(const EntropyVector& entropies, const EngineConfig& config) {
  return Normalize(Method::kIcw, entropies.e, config, ErrorCode::kAllZeroEntropy);
}

Matrix<double> SmoothPrior(const Matrix<double>& q, double epsilon) {
  if (epsilon == 0.0) return q;
  Matrix<double> out(q.rows(), q.cols());
  const double denom = 1.0 + static_cast<double>(q.rows()) * epsilon;
  for (std::size_t m = 0; m < q.rows(); ++m) {
    for (std::size_t r = 0; r < q.cols(); ++r) {
      out(m, r) = (q(m, r) + epsilon) / denom;
    }
  }
  return out;
}

DivergenceVector Kld(const RelativeVarianceProfile& profile,
                     const PriorProfile& prior, const EngineConfig& config) {
  const Matrix<double>& p = profile.p;
  if (!prior.q.SameShape(p.rows(), p.cols())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prior shape does not match the relative variance profile");
  }
  const Matrix<double> q = SmoothPrior(prior.q, config.prior_smoothing_epsilon);
  const double log_base = std::log(config.kld_log_base);

  DivergenceVector out{{}, config.kld_log_base};
  out.d.reserve(p.cols());
  for (std::size_t r = 0; r < p.cols(); ++r) {
    double nats = 0.0;
    for (std::size_t m = 0; m < p.rows(); ++m) {
      if (p(m, r) == 0.0) continue;
      if (q(m, r) == 0.0) {
        throw Error(ErrorCode::kZeroPriorSupport,
                    "alternative " + std::to_string(m) + ", attribute " +
                        std::to_string(r) +
                        ": prior is zero where the data is not");
      }
      nats += p(m, r) * std::log(p(m, r) / q(m, r));
    }
    out.d.push_back(nats / log_base);
  }
  return out;
}

WeightVector Ighw(const DivergenceVector& divergences,
                  const EngineConfig& config) {
  return Normalize(Method::kIghw, divergences.d, config,
                   ErrorCode::kAllZeroDivergence);
}

IgdVector Igd(const EntropyVector& entropies, const EngineConfig& config) {
  const std::vector<double>& e = entropies.e;
  const std::size_t num_attr = e.size();
  if (num_attr < 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "IGD needs at least two attributes");
  }

  // E(r) - sum_{j != r} (1 - E(j)) equals sum_j E(j) - (R - 1) for every r.
  // Evaluating that form once keeps the entries bitwise equal; the term by
  // term form differs between entries in the last few ulps.
  double total = 0.0;
  for (double x : e) total += x;
  IgdVector out;
  out.raw.assign(num_attr, total - static_cast<double>(num_attr - 1));

  out.g = out.raw;
  const auto [lo, hi] = std::minmax_element(out.raw.begin(), out.raw.end());
  if (*lo >= 0.0) return out;

  if (config.igd_negative_policy == IgdNegativePolicy::kError) {
    throw Error(ErrorCode::kNegativeIgd, VectorText(out.raw));
  }
  out.resolution = IgdResolution::kMinShifted;
  if (*lo == *hi) {
    out.g.assign(num_attr, 1.0 / static_cast<double>(num_attr));
  } else {
    const double shift = *lo;
    for (double& g : out.g) g -= shift;
  }
  return out;
}

WeightVector Igdw(const IgdVector& igd, const EngineConfig& config) {
  return Normalize(Method::kIgdw, igd.g, config, ErrorCode::kZeroIgdSum);
}

}  // namespace infoweight
