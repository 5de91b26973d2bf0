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

#include "infoweight/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "infoweight/errors.hpp"
#include "json_support.hpp"

namespace infoweight {
namespace {

using internal::Json;

std::string_view StripLineEnd(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void ParseFail(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + reason);
}

bool ParseDouble(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

// Iterates over the non-empty lines of a CSV body after checking its header.
template <typename RowFn>
void ForEachCsvRow(std::string_view text, std::string_view header, RowFn fn) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::size_t line_no = 0;
  bool saw_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = StripLineEnd(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!saw_header) {
      if (line != header) {
        ParseFail(line_no, "expected header '" + std::string(header) + "'");
      }
      saw_header = true;
      continue;
    }
    if (Trim(line).empty()) continue;
    fn(line_no, SplitFields(line));
  }
  if (!saw_header) ParseFail(1, "missing header");
}

void CheckIdentifier(const std::string& id) {
  if (id.find_first_of(",\r\n") != std::string::npos) {
    throw Error(ErrorCode::kParseError,
                "identifier '" + id + "' contains a comma or line break");
  }
}

Json ParseJson(std::string_view text, ErrorCode code) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(code, e.what());
  }
}

void CheckSchemaVersion(const Json& doc, ErrorCode code) {
  if (!doc.is_object()) throw Error(code, "document must be a JSON object");
  if (!doc.contains("schema_version") ||
      doc.at("schema_version") != kSchemaVersion) {
    throw Error(code, "unsupported or missing schema_version (expected " +
                          std::to_string(kSchemaVersion) + ")");
  }
}

double LogBaseFromJson(const Json& value, ErrorCode code) {
  if (value.is_string()) {
    try {
      return ParseLogBase(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(code, e.detail());
    }
  }
  if (value.is_number()) return value.get<double>();
  throw Error(code, "log base must be a number or \"e\"");
}

}  // namespace

namespace internal {

Json LogBaseToJson(double base) {
  if (base == std::numbers::e) return "e";
  return base;
}

Json ConfigToJson(const EngineConfig& config) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["entropy_log_base"] = LogBaseToJson(config.entropy_log_base);
  doc["kld_log_base"] = LogBaseToJson(config.kld_log_base);
  doc["degenerate_variance_policy"] = ToString(config.degenerate_variance_policy);
  doc["prior_smoothing_epsilon"] = config.prior_smoothing_epsilon;
  doc["igd_negative_policy"] = ToString(config.igd_negative_policy);
  doc["report_weight_rounding"] = config.report_weight_rounding
                                      ? Json(*config.report_weight_rounding)
                                      : Json(nullptr);
  return doc;
}

std::string DumpDocument(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace internal

std::string FormatShortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIoError, "cannot create directory " +
                                           path.parent_path().string() + ": " +
                                           ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIoError, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

SampleSet ParseSamples(std::string_view text) {
  std::vector<UtilitySample> raw;
  ForEachCsvRow(text, kSamplesHeader, [&](std::size_t line, const auto& fields) {
    if (fields.size() != 4) {
      ParseFail(line, "expected 4 fields, found " + std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (fields[i].empty()) ParseFail(line, "empty identifier");
    }
    double utility = 0.0;
    if (!ParseDouble(fields[3], utility)) {
      ParseFail(line, "invalid utility '" + std::string(fields[3]) + "'");
    }
    if (!std::isfinite(utility)) {
      throw Error(ErrorCode::kNonFiniteUtility,
                  "line " + std::to_string(line) + ": '" +
                      std::string(fields[3]) + "'");
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]),
                   std::string(fields[2]), utility});
  });
  return ValidateSampleSet(std::move(raw));
}

SampleSet ParseSamples(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSamples(std::string_view(buf.str()));
}

SampleSet ReadSamples(const std::filesystem::path& path) {
  return ParseSamples(std::string_view(ReadTextFile(path)));
}

std::string FormatSamples(const std::vector<UtilitySample>& samples) {
  std::string out(kSamplesHeader);
  out += '\n';
  for (const auto& s : samples) {
    CheckIdentifier(s.alternative);
    CheckIdentifier(s.attribute);
    CheckIdentifier(s.situation);
    out += s.alternative + ',' + s.attribute + ',' + s.situation + ',' +
           FormatShortest(s.utility) + '\n';
  }
  return out;
}

std::string FormatSamples(const SampleSet& samples) {
  return FormatSamples(samples.samples());
}

PriorProfile ParsePriorCsv(std::string_view text, const SampleSet& samples,
                           std::string source_label) {
  const auto& alts = samples.alternatives();
  const auto& attrs = samples.attributes();
  auto index_of = [](const std::vector<std::string>& ids, std::string_view id) {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    return (it != ids.end() && *it == id) ? std::optional<std::size_t>(it - ids.begin())
                                          : std::nullopt;
  };

  Matrix<double> q(alts.size(), attrs.size());
  Matrix<int> seen(alts.size(), attrs.size(), 0);
  ForEachCsvRow(text, kPriorHeader, [&](std::size_t line, const auto& fields) {
    if (fields.size() != 3) {
      ParseFail(line, "expected 3 fields, found " + std::to_string(fields.size()));
    }
    const auto r = index_of(attrs, fields[0]);
    if (!r) ParseFail(line, "unknown attribute '" + std::string(fields[0]) + "'");
    const auto m = index_of(alts, fields[1]);
    if (!m) ParseFail(line, "unknown alternative '" + std::string(fields[1]) + "'");
    double value = 0.0;
    if (!ParseDouble(fields[2], value) || !std::isfinite(value)) {
      ParseFail(line, "invalid probability '" + std::string(fields[2]) + "'");
    }
    if (seen(*m, *r)++) {
      ParseFail(line, "duplicate cell (" + std::string(fields[0]) + ", " +
                          std::string(fields[1]) + ")");
    }
    q(*m, *r) = value;
  });

  for (std::size_t r = 0; r < attrs.size(); ++r) {
    for (std::size_t m = 0; m < alts.size(); ++m) {
      if (!seen(m, r)) {
        throw Error(ErrorCode::kParseError,
                    "missing cell (" + attrs[r] + ", " + alts[m] + ")");
      }
    }
  }
  return ValidatePrior(q, samples, std::move(source_label));
}

PriorProfile ParsePriorJson(std::string_view text, const SampleSet& samples,
                            std::string source_label) {
  const Json doc = ParseJson(text, ErrorCode::kParseError);
  CheckSchemaVersion(doc, ErrorCode::kParseError);
  if (!doc.contains("prior") || !doc.at("prior").is_object()) {
    throw Error(ErrorCode::kParseError, "missing object 'prior'");
  }
  const auto& alts = samples.alternatives();
  const auto& attrs = samples.attributes();
  const Json& body = doc.at("prior");
  for (const auto& [attr, _] : body.items()) {
    if (!std::binary_search(attrs.begin(), attrs.end(), attr)) {
      throw Error(ErrorCode::kParseError, "unknown attribute '" + attr + "'");
    }
  }

  Matrix<double> q(alts.size(), attrs.size());
  for (std::size_t r = 0; r < attrs.size(); ++r) {
    if (!body.contains(attrs[r]) || !body.at(attrs[r]).is_object()) {
      throw Error(ErrorCode::kParseError, "missing attribute '" + attrs[r] + "'");
    }
    const Json& column = body.at(attrs[r]);
    if (column.size() != alts.size()) {
      throw Error(ErrorCode::kParseError,
                  "attribute '" + attrs[r] + "' must list every alternative once");
    }
    for (std::size_t m = 0; m < alts.size(); ++m) {
      if (!column.contains(alts[m]) || !column.at(alts[m]).is_number()) {
        throw Error(ErrorCode::kParseError,
                    "missing cell (" + attrs[r] + ", " + alts[m] + ")");
      }
      q(m, r) = column.at(alts[m]).get<double>();
    }
  }
  if (doc.contains("label") && doc.at("label").is_string()) {
    source_label = doc.at("label").get<std::string>();
  }
  return ValidatePrior(q, samples, std::move(source_label));
}

PriorProfile ReadPrior(const std::filesystem::path& path,
                       const SampleSet& samples) {
  const std::string text = ReadTextFile(path);
  const std::string label = path.filename().string();
  if (path.extension() == ".json") return ParsePriorJson(text, samples, label);
  return ParsePriorCsv(text, samples, label);
}

std::string FormatPriorCsv(const PriorProfile& prior,
                           std::span<const std::string> alternatives,
                           std::span<const std::string> attributes) {
  std::string out(kPriorHeader);
  out += '\n';
  for (std::size_t r = 0; r < attributes.size(); ++r) {
    for (std::size_t m = 0; m < alternatives.size(); ++m) {
      out += attributes[r] + ',' + alternatives[m] + ',' +
             FormatShortest(prior.q(m, r)) + '\n';
    }
  }
  return out;
}

double ParseLogBase(std::string_view text) {
  text = Trim(text);
  if (text == "e") return std::numbers::e;
  double value = 0.0;
  if (!ParseDouble(text, value) || !(value > 1.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidConfig,
                "log base must be 'e' or a number > 1, got '" +
                    std::string(text) + "'");
  }
  return value;
}

EngineConfig ParseConfigJson(std::string_view text) {
  constexpr ErrorCode kCode = ErrorCode::kInvalidConfig;
  const Json doc = ParseJson(text, kCode);
  CheckSchemaVersion(doc, kCode);

  EngineConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "schema_version") {
        continue;
      } else if (key == "entropy_log_base") {
        config.entropy_log_base = LogBaseFromJson(value, kCode);
      } else if (key == "kld_log_base") {
        config.kld_log_base = LogBaseFromJson(value, kCode);
      } else if (key == "degenerate_variance_policy") {
        const auto p = ParseDegenerateVariancePolicy(value.get<std::string>());
        if (!p) throw Error(kCode, "unknown degenerate_variance_policy");
        config.degenerate_variance_policy = *p;
      } else if (key == "prior_smoothing_epsilon") {
        config.prior_smoothing_epsilon = value.get<double>();
      } else if (key == "igd_negative_policy") {
        const auto p = ParseIgdNegativePolicy(value.get<std::string>());
        if (!p) throw Error(kCode, "unknown igd_negative_policy");
        config.igd_negative_policy = *p;
      } else if (key == "report_weight_rounding") {
        config.report_weight_rounding =
            value.is_null() ? std::nullopt : std::optional<int>(value.get<int>());
      } else {
        throw Error(kCode, "unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(kCode, e.what());
  }
  config.Validate();
  return config;
}

EngineConfig ReadConfig(const std::filesystem::path& path) {
  return ParseConfigJson(ReadTextFile(path));
}

std::string FormatConfigJson(const EngineConfig& config) {
  return internal::DumpDocument(internal::ConfigToJson(config));
}

ScenarioSpec ParseScenarioJson(std::string_view text) {
  constexpr ErrorCode kCode = ErrorCode::kInvalidSpec;
  const Json doc = ParseJson(text, kCode);
  CheckSchemaVersion(doc, kCode);

  ScenarioSpec spec;
  try {
    spec.seed = doc.value("seed", std::uint64_t{0});
    const auto mode = ParseMomentMode(doc.value("moment_mode", std::string("exact")));
    if (!mode) throw Error(kCode, "unknown moment_mode");
    spec.moment_mode = *mode;
    const auto family = ParseFamily(doc.value("family", std::string("normal")));
    if (!family) throw Error(kCode, "unknown family");
    spec.family = *family;
    if (!doc.contains("pairs") || !doc.at("pairs").is_array()) {
      throw Error(kCode, "missing array 'pairs'");
    }
    for (const Json& p : doc.at("pairs")) {
      const auto count = p.at("sample_count").get<std::int64_t>();
      if (count < 0) throw Error(kCode, "negative sample_count");
      spec.pairs.push_back({p.at("alternative").get<std::string>(),
                            p.at("attribute").get<std::string>(),
                            p.at("target_mean").get<double>(),
                            p.at("target_variance").get<double>(),
                            static_cast<std::size_t>(count)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(kCode, e.what());
  }
  spec.Validate();
  return spec;
}

ScenarioSpec ReadScenario(const std::filesystem::path& path) {
  return ParseScenarioJson(ReadTextFile(path));
}

std::string FormatScenarioJson(const ScenarioSpec& spec) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["seed"] = spec.seed;
  doc["moment_mode"] = ToString(spec.moment_mode);
  doc["family"] = ToString(spec.family);
  Json pairs = Json::array();
  for (const auto& p : spec.pairs) {
    pairs.push_back({{"alternative", p.alternative},
                     {"attribute", p.attribute},
                     {"target_mean", p.target_mean},
                     {"target_variance", p.target_variance},
                     {"sample_count", p.sample_count}});
  }
  doc["pairs"] = std::move(pairs);
  return internal::DumpDocument(doc);
}

}  // namespace infoweight
