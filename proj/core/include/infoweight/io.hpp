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

// File formats.
//
//   samples   CSV, header `alternative,attribute,situation,utility`
//   prior     CSV, header `attribute,alternative,probability`, or a JSON
//             document (chosen by a .json extension)
//   config    JSON, schema_version 1
//   scenario  JSON, schema_version 1
//
// Text is UTF-8 with LF line endings; a trailing CR is tolerated on input.
// Identifiers may not contain commas or line breaks. Numbers are written in
// the shortest form that round-trips.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "infoweight/model.hpp"
#include "infoweight/scenario_sim.hpp"

namespace infoweight {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kSamplesHeader =
    "alternative,attribute,situation,utility";
inline constexpr std::string_view kPriorHeader =
    "attribute,alternative,probability";

// Shortest round-trip decimal form of `value`.
std::string FormatShortest(double value);

std::string ReadTextFile(const std::filesystem::path& path);
// Writes bytes verbatim, creating parent directories as needed.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

std::string Sha256Hex(std::string_view bytes);

SampleSet ParseSamples(std::istream& in);
SampleSet ParseSamples(std::string_view text);
SampleSet ReadSamples(const std::filesystem::path& path);
std::string FormatSamples(const std::vector<UtilitySample>& samples);
std::string FormatSamples(const SampleSet& samples);

PriorProfile ParsePriorCsv(std::string_view text, const SampleSet& samples,
                           std::string source_label = "prior");
PriorProfile ParsePriorJson(std::string_view text, const SampleSet& samples,
                            std::string source_label = "prior");
PriorProfile ReadPrior(const std::filesystem::path& path,
                       const SampleSet& samples);
std::string FormatPriorCsv(const PriorProfile& prior,
                           std::span<const std::string> alternatives,
                           std::span<const std::string> attributes);

EngineConfig ParseConfigJson(std::string_view text);
EngineConfig ReadConfig(const std::filesystem::path& path);
std::string FormatConfigJson(const EngineConfig& config);

// "e" for Euler's number, otherwise a decimal > 1.
double ParseLogBase(std::string_view text);

ScenarioSpec ParseScenarioJson(std::string_view text);
ScenarioSpec ReadScenario(const std::filesystem::path& path);
std::string FormatScenarioJson(const ScenarioSpec& spec);

}  // namespace infoweight
