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

#include <stdexcept>
#include <string>
#include <string_view>

namespace infoweight {

enum class ErrorCode {
  // Input validation.
  kEmptyInput,
  kDuplicateTriple,
  kInsufficientSamples,
  kNonFiniteUtility,
  kColumnNotNormalized,
  kNegativeEntry,
  kDimensionMismatch,
  kInvalidSpec,
  kInvalidConfig,
  kParseError,
  kMissingPrior,
  // Per-method computation failures.
  kDegenerateAttribute,
  kAllZeroEntropy,
  kZeroPriorSupport,
  kAllZeroDivergence,
  kNegativeIgd,
  kZeroIgdSum,
  // Environment.
  kIoError,
  kReproductionMismatch,
};

enum class ErrorCategory { kValidation, kComputation, kIo, kReproduction };

std::string_view ToString(ErrorCode code);
ErrorCategory CategoryOf(ErrorCode code);

// Process exit status for a failure of the given code: validation 2,
// reproduction mismatch 3, I/O 4. Computation errors surface as
// validation failures when they escape a standalone command.
int ExitCodeFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace infoweight
