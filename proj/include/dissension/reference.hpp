#pragma once

#include <functional>

namespace dissension::reference {

// Closed forms for the pure GHZ and W states (default labeling), used to cross-check
// the numeric pipeline.

/// H(A | {pi^B}) for GHZ: shannon_pair((1 - cos 2t)/2, (1 + cos 2t)/2).
double ghz_conditional_analytic(double t);
/// 1 - 4 ghz_conditional_analytic(t); lies in [-3, 1].
double ghz_d1_analytic(double t);

/// H(A | {pi^B}) for W: 1 + (p H(1 + x+, 1 - x+) + (1 - p) H(1 + x-, 1 - x-)) / 2,
/// p = (3 + cos 2t)/6, x+- = sqrt((5 +- 3 cos 2t)(1 -+ cos 2t)) / (3 +- cos 2t).
double w_conditional_analytic(double t);
/// H(AB) - 4 w_conditional_analytic(t).
double w_d1_analytic(double t);
/// Entropy of the W two-qubit reduction, spectrum {2/3, 1/3}: log2 3 - 2/3.
double w_pair_entropy();

enum class Family { ghz, w };
enum class Quantity { conditional_entropy, d1 };

struct AnalyticCurve {
  Family state_family;
  Quantity quantity;
  std::function<double(double)> evaluator;

  double operator()(double t) const { return evaluator(t); }
};

AnalyticCurve analytic_curve(Family family, Quantity quantity);

}  // namespace dissension::reference
