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

#include "infoweight/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>

#include "infoweight/io.hpp"
#include "json_support.hpp"

namespace infoweight {
namespace {

using internal::Json;

std::string Fixed(double value, int decimals) {
  if (value == 0.0) value = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);
  }
  return out;
}

template <typename T>
Json MatrixJson(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json MatrixDisplay(const Matrix<double>& m, int decimals) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Fixed(m(i, j), decimals));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json VectorDisplay(std::span<const double> v, int decimals) {
  Json out = Json::array();
  for (double x : v) out.push_back(Fixed(x, decimals));
  return out;
}

Json IdList(std::span<const std::size_t> indices,
            std::span<const std::string> ids) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(ids[i]);
  return out;
}

Json RenderJson(const Report& report, int precision, bool include_rankings) {
  const MomentMatrices& mom = report.moments;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "infoweight.report";

  Json prov;
  prov["tool_version"] = report.provenance.tool_version;
  Json inputs = Json::array();
  for (const auto& in : report.provenance.inputs) {
    inputs.push_back({{"role", in.role}, {"source", in.source}, {"sha256", in.sha256}});
  }
  prov["inputs"] = std::move(inputs);
  doc["provenance"] = std::move(prov);
  doc["config"] = internal::ConfigToJson(report.config);
  doc["alternatives"] = mom.alternatives;
  doc["attributes"] = mom.attributes;
  doc["warnings"] = report.warnings;

  doc["moments"] = {{"gamma", MatrixJson(mom.gamma)},
                    {"lambda", MatrixJson(mom.lambda)},
                    {"sample_counts", MatrixJson(mom.sample_counts)}};
  doc["relative_variance"] =
      report.relative_variance ? MatrixJson(report.relative_variance->p) : Json();
  doc["entropy"] = report.entropies
                       ? Json{{"log_base", internal::LogBaseToJson(report.entropies->log_base)},
                              {"values", report.entropies->e}}
                       : Json();
  doc["divergence"] =
      report.divergences
          ? Json{{"log_base", internal::LogBaseToJson(report.divergences->log_base)},
                 {"values", report.divergences->d}}
          : Json();
  doc["igd"] = report.igd ? Json{{"raw", report.igd->raw},
                                 {"resolved", report.igd->g},
                                 {"resolution", ToString(report.igd->resolution)}}
                          : Json();

  Json methods = Json::object();
  Json display_methods = Json::object();
  for (const auto& outcome : report.methods) {
    const std::string name(ToString(outcome.method));
    Json m;
    if (!outcome.ok()) {
      m["status"] = "error";
      m["error"] = {{"code", ToString(*outcome.error_code)},
                    {"message", outcome.error_message}};
      methods[name] = std::move(m);
      continue;
    }
    const RankingReport& rk = *outcome.ranking;
    m["status"] = "ok";
    m["weights"] = outcome.weights->weights;
    m["raw_scores"] = outcome.weights->raw_scores;
    Json ties = Json::array();
    for (const auto& group : rk.ties) ties.push_back(IdList(group, mom.alternatives));
    if (include_rankings) {
      m["ranking"] = {
          {"weights_used", rk.weights_used},
          {"rounding_applied",
           rk.rounding_applied ? Json(*rk.rounding_applied) : Json()},
          {"expectations", rk.expectations},
          {"ranks", rk.ranks},
          {"order", IdList(rk.order, mom.alternatives)},
          {"ties", std::move(ties)}};
    }
    methods[name] = std::move(m);
    display_methods[name]["weights"] =
        VectorDisplay(outcome.weights->weights, precision);
    if (include_rankings) {
      display_methods[name]["expectations"] =
          VectorDisplay(rk.expectations, precision);
    }
  }
  doc["methods"] = std::move(methods);

  Json display;
  display["precision"] = precision;
  display["gamma"] = MatrixDisplay(mom.gamma, precision);
  display["lambda"] = MatrixDisplay(mom.lambda, precision);
  if (report.relative_variance) {
    display["relative_variance"] = MatrixDisplay(report.relative_variance->p, precision);
  }
  if (report.entropies) display["entropy"] = VectorDisplay(report.entropies->e, precision);
  if (report.divergences) {
    display["divergence"] = VectorDisplay(report.divergences->d, precision);
  }
  if (report.igd) display["igd"] = VectorDisplay(report.igd->g, precision);
  display["methods"] = std::move(display_methods);
  doc["display"] = std::move(display);
  return doc;
}

// Left-aligned first column, right-aligned numeric columns.
class TextTable {
 public:
  explicit TextTable(std::string title) : title_(std::move(title)) {}

  void AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void AddRule() { rows_.emplace_back(); }

  std::string Render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    std::size_t total = 0;
    for (std::size_t w : width) total += w + 2;
    total = std::max<std::size_t>(total, 2) - 2;
    total = std::max(total, title_.size());

    std::string out = title_ + "\n" + std::string(total, '=') + "\n";
    for (const auto& row : rows_) {
      if (row.empty()) {
        out += std::string(total, '-') + "\n";
        continue;
      }
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += "  ";
        const std::size_t pad = width[i] - row[i].size();
        line += i == 0 ? row[i] + std::string(pad, ' ')
                       : std::string(pad, ' ') + row[i];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    return out;
  }

 private:
  std::string title_;
  std::vector<std::vector<std::string>> rows_;
};

std::string LogLabel(double base) {
  if (base == std::numbers::e) return "Ln";
  return "Log" + FormatShortest(base);
}

std::string Unavailable(const Report& report, Method method) {
  const MethodOutcome* outcome = report.Find(method);
  if (outcome == nullptr) return "not requested";
  return std::string(ToString(*outcome->error_code)) + ": " + outcome->error_message;
}

std::string RenderText(const Report& report, const EmitOptions& options) {
  const MomentMatrices& mom = report.moments;
  const std::size_t num_alt = mom.num_alternatives();
  const std::size_t num_attr = mom.num_attributes();
  const int dp = options.display_precision;
  std::string out;

  {
    TextTable t("Table A1. Mean and variance per alternative and attribute");
    std::vector<std::string> head{"Attribute"};
    for (const auto& a : mom.alternatives) {
      head.push_back(a + " mean");
      head.push_back(a + " variance");
    }
    t.AddRow(std::move(head));
    t.AddRule();
    for (std::size_t r = 0; r < num_attr; ++r) {
      std::vector<std::string> row{mom.attributes[r]};
      for (std::size_t m = 0; m < num_alt; ++m) {
        row.push_back(Fixed(mom.gamma(m, r), dp));
        row.push_back(Fixed(mom.lambda(m, r), dp));
      }
      t.AddRow(std::move(row));
    }
    out += t.Render();
  }

  if (report.relative_variance && report.entropies) {
    const Matrix<double>& p = report.relative_variance->p;
    const double base = report.entropies->log_base;
    const std::string log_label = LogLabel(base);
    TextTable t("Table A2. Normalised variance and " + log_label);
    std::vector<std::string> head{"Attribute"};
    for (const auto& a : mom.alternatives) head.push_back(a);
    for (const auto& a : mom.alternatives) head.push_back(log_label + " " + a);
    t.AddRow(std::move(head));
    t.AddRule();
    for (std::size_t r = 0; r < num_attr; ++r) {
      std::vector<std::string> row{mom.attributes[r]};
      for (std::size_t m = 0; m < num_alt; ++m) row.push_back(Fixed(p(m, r), dp));
      for (std::size_t m = 0; m < num_alt; ++m) {
        row.push_back(p(m, r) > 0.0 ? Fixed(std::log(p(m, r)) / std::log(base), dp)
                                    : "-inf");
      }
      t.AddRow(std::move(row));
    }
    out += "\n" + t.Render();
  }

  auto method_table = [&](const std::string& title, const std::string& score_name,
                          const std::vector<double>* scores, Method method,
                          const std::string& weight_name) {
    const MethodOutcome* outcome = report.Find(method);
    TextTable t(title);
    if (scores == nullptr && (outcome == nullptr || !outcome->ok())) {
      t.AddRow({"unavailable (" + Unavailable(report, method) + ")"});
      out += "\n" + t.Render();
      return;
    }
    t.AddRow({"Attribute", score_name, weight_name});
    t.AddRule();
    for (std::size_t r = 0; r < num_attr; ++r) {
      std::vector<std::string> row{mom.attributes[r]};
      row.push_back(scores ? Fixed((*scores)[r], dp) : "-");
      row.push_back(outcome && outcome->ok() ? Fixed(outcome->weights->weights[r], dp)
                                             : "-");
      t.AddRow(std::move(row));
    }
    if (outcome && !outcome->ok()) {
      t.AddRule();
      t.AddRow({weight_name + " unavailable (" + Unavailable(report, method) + ")"});
    }
    out += "\n" + t.Render();
  };

  if (report.entropies) {
    method_table("Table A3. Entropy and information contents weight (ICW)",
                 "Entropy", &report.entropies->e, Method::kIcw, "ICW");
  }
  if (report.Find(Method::kIghw)) {
    method_table("Table A4. Information gain (IGH) and normalised weight (IGHW)",
                 "IGH", report.divergences ? &report.divergences->d : nullptr,
                 Method::kIghw, "IGHW");
  }
  if (report.Find(Method::kIgdw)) {
    method_table(
        "Table A5. Information gain difference (IGD) and normalised weight (IGDW)",
        "IGD", report.igd ? &report.igd->g : nullptr, Method::kIgdw, "IGDW");
  }

  if (options.include_rankings && !report.methods.empty()) {
    const auto rounding = report.config.report_weight_rounding;
    const int weight_dp = rounding.value_or(dp);
    const int expect_dp = rounding ? std::min(dp, std::max(*rounding, 2)) : dp;
    TextTable t("Table A6. Weights, expectations and ranking" +
                (rounding ? " (weights rounded to " + std::to_string(*rounding) +
                                " decimals before aggregation)"
                          : std::string()));
    std::vector<std::string> head{"Method"};
    for (const auto& a : mom.attributes) head.push_back(a);
    t.AddRow(std::move(head));
    t.AddRule();
    for (const auto& o : report.methods) {
      std::vector<std::string> row{std::string(ToString(o.method)) + "-Weight"};
      for (std::size_t r = 0; r < num_attr; ++r) {
        row.push_back(o.ok() ? Fixed(o.ranking->weights_used[r], weight_dp) : "-");
      }
      t.AddRow(std::move(row));
    }
    t.AddRule();
    head = {"Method"};
    for (const auto& a : mom.alternatives) head.push_back(a);
    t.AddRow(std::move(head));
    t.AddRule();
    for (const auto& o : report.methods) {
      std::vector<std::string> row{std::string(ToString(o.method)) + "-Expectation"};
      for (std::size_t m = 0; m < num_alt; ++m) {
        row.push_back(o.ok() ? Fixed(o.ranking->expectations[m], expect_dp) : "-");
      }
      t.AddRow(std::move(row));
    }
    t.AddRule();
    for (const auto& o : report.methods) {
      std::vector<std::string> row{std::string(ToString(o.method)) + "-Ranking"};
      for (std::size_t m = 0; m < num_alt; ++m) {
        row.push_back(o.ok() ? std::to_string(o.ranking->ranks[m]) : "-");
      }
      t.AddRow(std::move(row));
    }
    bool any_tie = false;
    for (const auto& o : report.methods) {
      if (!o.ok()) continue;
      for (const auto& group : o.ranking->ties) {
        if (!any_tie) t.AddRule();
        any_tie = true;
        std::string names;
        for (std::size_t i : group) names += (names.empty() ? "" : ", ") + mom.alternatives[i];
        t.AddRow({std::string(ToString(o.method)) + " tie: " + names});
      }
    }
    out += "\n" + t.Render();
  }

  if (!report.warnings.empty()) {
    out += "\nWarnings\n";
    for (const auto& w : report.warnings) out += "  - " + w + "\n";
  }
  return out;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "text") return ReportFormat::kText;
  return std::nullopt;
}

std::string RenderReport(const Report& report, const EmitOptions& options) {
  if (options.format == ReportFormat::kJson) {
    return internal::DumpDocument(
        RenderJson(report, options.display_precision, options.include_rankings));
  }
  return RenderText(report, options);
}

void EmitReport(const Report& report, const EmitOptions& options,
                const std::filesystem::path& destination) {
  const std::string text = RenderReport(report, options);
  if (destination == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::kIoError, "cannot write to stdout");
    return;
  }
  WriteTextFile(destination, text);
}

}  // namespace infoweight
