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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "infoweight/pipeline.hpp"

namespace infoweight {

enum class ReportFormat { kJson, kText };

std::optional<ReportFormat> ParseReportFormat(std::string_view text);

struct EmitOptions {
  ReportFormat format = ReportFormat::kJson;
  // Include expectations and ranks (JSON "ranking", text table A6).
  bool include_rankings = true;
  // Decimal places for displayed values.
  int display_precision = 4;
};

// JSON carries every intermediate at full precision plus a display-rounded
// view. Text renders six aligned tables:
//   A1 means and variances      A4 IGH and IGHW
//   A2 relative variance, log   A5 IGD and IGDW
//   A3 entropy and ICW          A6 weights, expectations, ranking
// Output is a pure function of the report.
std::string RenderReport(const Report& report, const EmitOptions& options);

// Writes RenderReport output to `destination`; "-" means stdout.
void EmitReport(const Report& report, const EmitOptions& options,
                const std::filesystem::path& destination);

}  // namespace infoweight
