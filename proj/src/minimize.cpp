#include "dissension/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dissension/errors.hpp"
#include "dissension/parallel.hpp"

namespace dissension {

namespace {

double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(t, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

}  // namespace

GoldenSectionResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  GoldenSectionResult best{fc <= fd ? c : d, std::min(fc, fd), 2};

  while (hi - lo >= tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      if (fc < best.value) best = {c, fc, best.evaluations};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      if (fd < best.value) best = {d, fd, best.evaluations};
    }
    ++best.evaluations;
  }
  return best;
}

MinimizationResult minimize_over_t(const std::function<double(double)>& f, const MinimizerConfig& config) {
  if (config.grid_points < 8) throw InvalidParam("minimizer needs at least 8 grid points");
  if (!(config.refine_tol > 0.0)) throw InvalidParam("refine tolerance must be positive");

  const double step = 2.0 * std::numbers::pi / config.grid_points;
  const auto samples = tabulate(
      static_cast<std::size_t>(config.grid_points), [&](std::size_t i) { return f(step * static_cast<double>(i)); },
      config.workers);
  const auto best_it = std::min_element(samples.begin(), samples.end());
  const double t_best = step * static_cast<double>(best_it - samples.begin());

  MinimizationResult result;
  result.grid_points = config.grid_points;
  result.refined_tol = config.refine_tol;
  result.best_coarse_value = *best_it;
  result.value = *best_it;
  result.argmin_t = t_best;

  const auto refined = golden_section_minimize(f, t_best - step, t_best + step, config.refine_tol);
  result.evaluations = config.grid_points + refined.evaluations;
  if (refined.value < result.value) {
    result.value = refined.value;
    result.argmin_t = wrap_angle(refined.x);
  }
  return result;
}

}  // namespace dissension
