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

#include "infoweight/errors.hpp"

namespace infoweight {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDuplicateTriple: return "DuplicateTriple";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kNonFiniteUtility: return "NonFiniteUtility";
    case ErrorCode::kColumnNotNormalized: return "ColumnNotNormalized";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingPrior: return "MissingPrior";
    case ErrorCode::kDegenerateAttribute: return "DegenerateAttribute";
    case ErrorCode::kAllZeroEntropy: return "AllZeroEntropy";
    case ErrorCode::kZeroPriorSupport: return "ZeroPriorSupport";
    case ErrorCode::kAllZeroDivergence: return "AllZeroDivergence";
    case ErrorCode::kNegativeIgd: return "NegativeIgd";
    case ErrorCode::kZeroIgdSum: return "ZeroIgdSum";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kReproductionMismatch: return "ReproductionMismatch";
  }
  return "Unknown";
}

ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateAttribute:
    case ErrorCode::kAllZeroEntropy:
    case ErrorCode::kZeroPriorSupport:
    case ErrorCode::kAllZeroDivergence:
    case ErrorCode::kNegativeIgd:
    case ErrorCode::kZeroIgdSum:
      return ErrorCategory::kComputation;
    case ErrorCode::kIoError:
      return ErrorCategory::kIo;
    case ErrorCode::kReproductionMismatch:
      return ErrorCategory::kReproduction;
    default:
      return ErrorCategory::kValidation;
  }
}

int ExitCodeFor(ErrorCode code) {
  switch (CategoryOf(code)) {
    case ErrorCategory::kIo: return 4;
    case ErrorCategory::kReproduction: return 3;
    case ErrorCategory::kValidation:
    case ErrorCategory::kComputation:
      return 2;
  }
  return 2;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ToString(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace infoweight
