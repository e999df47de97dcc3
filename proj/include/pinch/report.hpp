#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pinch/charp.hpp"
#include "pinch/classify.hpp"
#include "pinch/gapset.hpp"

namespace pinch {

inline constexpr const char* kSchemaVersion = "1";

struct GapSummary {
  std::string form;
  bool finite = true;
  // Complete member list for finite forms.
  std::vector<ExponentVector> members;
  // Infinite forms: 1-based axes and d.
  std::optional<std::pair<std::size_t, std::size_t>> axes;
  Coord family_d = 0;
  Coord sample_degree = 0;
  std::vector<ExponentVector> sample;
  std::optional<ExponentVector> principal_generator;

  friend bool operator==(const GapSummary&, const GapSummary&) = default;
};

struct VerificationResult {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const VerificationResult&, const VerificationResult&) = default;
};

struct AnalysisReport {
  std::size_t n = 0;
  Coord d = 0;
  std::string kind;
  std::vector<ExponentVector> removed;
  GapSummary gap;
  ClassificationReport classification;
  std::vector<FSingularityReport> f_singularity;
  std::vector<VerificationResult> verification;
  std::vector<std::string> citations;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full report for one semigroup. The verification block re-checks the
/// closed form against the oracle for single pinches and traces Frobenius
/// once per characteristic.
AnalysisReport analyze(const SemigroupSpec& spec, const std::vector<Characteristic>& chars);

GapSummary summarize_gaps(const CokernelModel& model, Coord sample_degree);

nlohmann::json to_json(const ExponentVector& v);
ExponentVector exponent_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GapSummary& g);
nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& r);

}  // namespace pinch
