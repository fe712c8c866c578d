#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dissension/measures.hpp"
#include "dissension/states.hpp"

namespace dissension {

struct SweepRequest {
  /// Family and fixed parameters; the mixing weight is replaced by each a_axis value.
  StateSpec state;
  Measure measure = Measure::D1;
  QubitLabeling labeling;
  std::vector<double> t_axis;
  std::optional<std::vector<double>> a_axis;
};

/// Measure values over a (t, a) grid, a-major then t-minor.
struct SweepGrid {
  std::vector<double> t_axis;
  std::optional<std::vector<double>> a_axis;
  std::vector<double> values;
  Measure measure = Measure::D1;
  QubitLabeling labeling;
  std::string state;

  std::size_t rows() const noexcept { return a_axis ? a_axis->size() : 1; }
  double at(std::size_t a_index, std::size_t t_index) const { return values[a_index * t_axis.size() + t_index]; }
};

/// `steps` equally spaced points from lo to hi inclusive; steps >= 2.
std::vector<double> linspace(double lo, double hi, int steps);

/// Evaluates every cell with up to `workers` OpenMP threads (0 = default).
SweepGrid run_sweep(const SweepRequest& request, int workers = 0);
/// Single-threaded reference for run_sweep.
SweepGrid run_sweep_serial(const SweepRequest& request);

/// Header `t,a,value`; 12 significant digits; `a` left empty without an a axis; LF endings.
void write_csv(const SweepGrid& grid, std::ostream& out);
std::string format_csv_number(double v);

}  // namespace dissension
