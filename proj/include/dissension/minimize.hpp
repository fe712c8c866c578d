#pragma once

#include <functional>

namespace dissension {

struct MinimizerConfig {
  int grid_points = 720;
  double refine_tol = 1e-8;
  /// Coarse-scan workers; 0 = OpenMP default. Results do not depend on it.
  int workers = 1;
};

struct MinimizationResult {
  double value = 0.0;
  double argmin_t = 0.0;  // in [0, 2 pi)
  int grid_points = 0;
  double refined_tol = 0.0;
  int evaluations = 0;
  double best_coarse_value = 0.0;
};

struct GoldenSectionResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than `tol`.
/// Assumes f is unimodal on the bracket; returns the best point it visited.
GoldenSectionResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Uniform coarse scan of [0, 2 pi) followed by golden-section refinement around the
/// best sample. The returned value never exceeds the best coarse sample.
MinimizationResult minimize_over_t(const std::function<double(double)>& f, const MinimizerConfig& config = {});

}  // namespace dissension
