#include "dissension/report.hpp"

#include <numbers>

#include <json.hpp>

namespace dissension {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kMixingGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
constexpr double kBiseparableGrid[] = {0.1, 0.25, 0.4};
constexpr QubitLabeling kAllLabelings[] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

ReportRow make_row(const StateSpec& spec, const QubitLabeling& labeling, const MinimizerConfig& config) {
  const DensityMatrix rho = make_state(spec);
  ReportRow row;
  row.state = to_string(spec.family);
  if (spec.has_mixing_weight()) row.a = spec.a;
  row.labeling = labeling;
  row.delta1 = delta1(rho, labeling, config);
  row.delta2 = delta2(rho, labeling, config);
  return row;
}

Json to_json(const ReportRow& row) {
  Json j;
  j["state"] = row.state;
  j["a"] = row.a ? Json(*row.a) : Json(nullptr);
  j["labeling"] = {row.labeling.x, row.labeling.y, row.labeling.z};
  j["delta1"] = row.delta1.value;
  j["argmin_t1"] = row.delta1.argmin_t;
  j["delta2"] = row.delta2.value;
  j["argmin_t2"] = row.delta2.argmin_t;
  j["evaluations"] = row.delta1.evaluations + row.delta2.evaluations;
  return j;
}

}  // namespace

Report build_report(const MinimizerConfig& config) {
  Report report;
  report.config = config;
  const QubitLabeling physical;
  report.rows.push_back(make_row(StateSpec::ghz(), physical, config));
  report.rows.push_back(make_row(StateSpec::w(), physical, config));
  for (double a : kMixingGrid) report.rows.push_back(make_row(StateSpec::mixed_ghz(a), physical, config));
  for (double a : kMixingGrid) report.rows.push_back(make_row(StateSpec::mixed_w(a), physical, config));
  for (double a : kBiseparableGrid) report.rows.push_back(make_row(StateSpec::biseparable(a), physical, config));
  for (double a : kBiseparableGrid)
    for (const auto& labeling : kAllLabelings)
      report.biseparable_labelings.push_back(make_row(StateSpec::biseparable(a), labeling, config));
  report.negative_mi = negative_mi_demo();
  return report;
}

std::string report_to_json(const Report& report) {
  Json doc;
  doc["minimizer"] = {{"grid_points", report.config.grid_points}, {"refine_tol", report.config.refine_tol}};
  auto rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(to_json(row));
  doc["rows"] = std::move(rows);
  auto bis = Json::array();
  for (const auto& row : report.biseparable_labelings) bis.push_back(to_json(row));
  doc["biseparable_labelings"] = std::move(bis);
  doc["negative_mi_demo"] = {{"t", std::numbers::pi / 4},
                             {"i2", report.negative_mi.i2},
                             {"cond_mi", report.negative_mi.cond_mi},
                             {"i3", report.negative_mi.i3}};
  return doc.dump(2) + "\n";
}

}  // namespace dissension
