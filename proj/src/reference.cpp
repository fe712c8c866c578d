#include "dissension/reference.hpp"

#include <algorithm>
#include <cmath>

#include "dissension/measures.hpp"

namespace dissension::reference {

double ghz_conditional_analytic(double t) {
  const double c = std::cos(2.0 * t);
  return shannon_pair(std::max(0.0, (1.0 - c) / 2.0), std::max(0.0, (1.0 + c) / 2.0));
}

double ghz_d1_analytic(double t) { return 1.0 - 4.0 * ghz_conditional_analytic(t); }

double w_conditional_analytic(double t) {
  const double c = std::cos(2.0 * t);
  const double p = (3.0 + c) / 6.0;
  // Clamp round-off so 1 - x never goes negative.
  const double x_plus = std::min(1.0, std::sqrt(std::max(0.0, (5.0 + 3.0 * c) * (1.0 - c))) / (3.0 + c));
  const double x_minus = std::min(1.0, std::sqrt(std::max(0.0, (5.0 - 3.0 * c) * (1.0 + c))) / (3.0 - c));
  return 1.0 + 0.5 * (p * shannon_pair(1.0 + x_plus, 1.0 - x_plus) +
                      (1.0 - p) * shannon_pair(1.0 + x_minus, 1.0 - x_minus));
}

double w_pair_entropy() { return std::log2(3.0) - 2.0 / 3.0; }

double w_d1_analytic(double t) { return w_pair_entropy() - 4.0 * w_conditional_analytic(t); }

AnalyticCurve analytic_curve(Family family, Quantity quantity) {
  if (family == Family::ghz) {
    if (quantity == Quantity::conditional_entropy) return {family, quantity, ghz_conditional_analytic};
    return {family, quantity, ghz_d1_analytic};
  }
  if (quantity == Quantity::conditional_entropy) return {family, quantity, w_conditional_analytic};
  return {family, quantity, w_d1_analytic};
}

}  // namespace dissension::reference
