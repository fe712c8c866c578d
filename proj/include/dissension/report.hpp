#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dissension/measures.hpp"

namespace dissension {

struct ReportRow {
  std::string state;
  std::optional<double> a;
  QubitLabeling labeling;
  MinimizationResult delta1;
  MinimizationResult delta2;
};

struct Report {
  MinimizerConfig config;
  /// ghz, w, mixed families at a in {0, .25, .5, .75, 1}, biseparable at a in {.1, .25, .4}.
  std::vector<ReportRow> rows;
  /// Biseparable rows repeated for all six labelings (covers every measured pair for D2).
  std::vector<ReportRow> biseparable_labelings;
  ThreeVariableMi negative_mi;
};

Report build_report(const MinimizerConfig& config = {});
/// Pretty-printed JSON with a trailing newline; byte-stable for a fixed config.
std::string report_to_json(const Report& report);

}  // namespace dissension
