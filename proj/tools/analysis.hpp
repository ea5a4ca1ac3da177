#pragma once

// The covers -> cover ideal -> Rees -> x-condition -> powers -> certificates
// -> Betti pipeline behind `reescov analyze`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "reescov/binomial_gb.hpp"
#include "reescov/graph_io.hpp"
#include "reescov/resolutions.hpp"

namespace reescov::cli {

struct AnalyzeOptions {
  unsigned max_power = 3;
  bool betti = false;
  GbOptions gb;
  OrderSearchOptions order_search;
  BettiOptions betti_bounds;
};

enum class AnalysisStatus { verified, prediction_failed, resource_limit };

struct Prediction {
  std::string property;
  std::string reason;  // which hypothesis produced it
  bool hypothesis_verified = true;  // false: assumed from the construction
  unsigned k = 0;  // 0 when not tied to a power
  enum class Outcome { verified, failed, unchecked } outcome = Outcome::unchecked;
};

struct AnalysisReport {
  nlohmann::json body;     // deterministic part
  nlohmann::json timings;  // wall-clock milliseconds per stage
  std::vector<Prediction> predictions;
  std::vector<std::string> resource_limits;
  AnalysisStatus status = AnalysisStatus::verified;

  /// body with "timings_ms" attached.
  nlohmann::json to_json() const;
};

AnalysisReport analyze(const Construction& construction, const AnalyzeOptions& options);

/// One line per prediction failure; empty when none failed.
std::vector<std::string> failure_messages(const AnalysisReport& report);

}  // namespace reescov::cli
