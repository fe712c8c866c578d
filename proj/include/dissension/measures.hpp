#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dissension/minimize.hpp"
#include "dissension/states.hpp"

namespace dissension {

/// Assignment of the roles X, Y, Z to physical qubits. Dissension is not symmetric
/// under permutations, so every three-party measure takes one of these.
struct QubitLabeling {
  Qubit x = 0;
  Qubit y = 1;
  Qubit z = 2;

  /// Throws InvalidParam unless (x, y, z) is a permutation of (0, 1, 2).
  void validate() const;
  std::array<Qubit, 3> roles() const noexcept { return {x, y, z}; }
  friend bool operator==(const QubitLabeling&, const QubitLabeling&) = default;
};

/// {|u1> = cos t|0> + sin t|1>, |u2> = sin t|0> - cos t|1>}
class SingleQubitBasis {
 public:
  explicit SingleQubitBasis(double t);
  double angle() const noexcept { return t_; }
  const std::array<ComplexMatrix, 2>& projectors() const noexcept { return projectors_; }

 private:
  double t_;
  std::array<ComplexMatrix, 2> projectors_;
};

/// {cos t|00> + sin t|11>, -sin t|00> + cos t|11>, cos t|01> + sin t|10>, -sin t|01> + cos t|10>}
class TwoQubitBasis {
 public:
  explicit TwoQubitBasis(double t);
  double angle() const noexcept { return t_; }
  const std::array<ComplexMatrix, 4>& projectors() const noexcept { return projectors_; }

 private:
  double t_;
  std::array<ComplexMatrix, 4> projectors_;
};

// ---------------------------------------------------------------------------
// Entropies (all in bits)

/// -sum lambda log2 lambda over eigenvalues clamped to [0, 1].
double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of the reduced state on `roles`; naming every qubit gives the joint entropy.
double subsystem_entropy(const DensityMatrix& rho, std::span<const Qubit> roles);
double subsystem_entropy(const DensityMatrix& rho, std::initializer_list<Qubit> roles);

/// -x log2 x - y log2 y with 0 log 0 = 0. Arguments need not sum to one.
double shannon_pair(double x, double y);

/// H(kept | {pi^measured}) = sum_j p_j H(rho_kept|j), measuring one qubit in the
/// SingleQubitBasis or two qubits in the TwoQubitBasis at angle t.
double conditional_entropy(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured,
                           double t);
double conditional_entropy(const DensityMatrix& rho, std::initializer_list<Qubit> kept,
                           std::initializer_list<Qubit> measured, double t);

// ---------------------------------------------------------------------------
// Two-party quantities

/// I(kept : measured) = H(kept) - H(kept | {pi^measured}) for single qubits.
double mutual_information_2(const DensityMatrix& rho, double t, Qubit kept = 0, Qubit measured = 1);

/// D(kept : measured) = H(measured) - H(kept, measured) + H(kept | {pi^measured}).
double discord(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured, double t);
double discord(const DensityMatrix& rho, std::initializer_list<Qubit> kept, std::initializer_list<Qubit> measured,
               double t);
MinimizationResult min_discord(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured,
                               const MinimizerConfig& config = {});
MinimizationResult min_discord(const DensityMatrix& rho, std::initializer_list<Qubit> kept,
                               std::initializer_list<Qubit> measured, const MinimizerConfig& config = {});

/// Spin-flip concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Three-party quantities. All single-qubit measurements share the angle t.

double J3(const DensityMatrix& rho, const QubitLabeling& labeling = {});
double I3(const DensityMatrix& rho, const QubitLabeling& labeling, double t);
double K3(const DensityMatrix& rho, const QubitLabeling& labeling, double t);
double D1(const DensityMatrix& rho, const QubitLabeling& labeling, double t);
/// Measures the (Y, Z) pair of the labeling.
double D2(const DensityMatrix& rho, const QubitLabeling& labeling, double t);
/// D(XY:Z) - D(X:Z) - D(Y:Z) - D(X:Y) - D(Y:X), all at angle t.
double d1_via_discords(const DensityMatrix& rho, const QubitLabeling& labeling, double t);

MinimizationResult delta1(const DensityMatrix& rho, const QubitLabeling& labeling = {},
                          const MinimizerConfig& config = {});
MinimizationResult delta2(const DensityMatrix& rho, const QubitLabeling& labeling = {},
                          const MinimizerConfig& config = {});

/// Separate angles for the measurements on X, Y and Z.
struct MeasurementAngles {
  double on_x = 0.0;
  double on_y = 0.0;
  double on_z = 0.0;
};

double D1_independent(const DensityMatrix& rho, const QubitLabeling& labeling, const MeasurementAngles& angles);

struct IndependentMinimization {
  double value = 0.0;
  MeasurementAngles argmin;
  int evaluations = 0;
};

/// Minimum of D1 over independent angles. D1 splits into one term per measured qubit,
/// so each angle is minimized on its own.
IndependentMinimization delta1_independent(const DensityMatrix& rho, const QubitLabeling& labeling = {},
                                           const MinimizerConfig& config = {});

struct ThreeVariableMi {
  double i2 = 0.0;       // I(X:Y)
  double cond_mi = 0.0;  // I(X,Y|Z) = H(X|pi^Z) + H(Y|pi^Z) - H(X,Y|pi^Z)
  double i3 = 0.0;       // I(X:Y) - I(X,Y|Z)
};

ThreeVariableMi three_variable_mi(const DensityMatrix& rho, const QubitLabeling& labeling, double t);
/// GHZ measured in the Hadamard basis (t = pi/4): (0, 2, -2).
ThreeVariableMi negative_mi_demo();

// ---------------------------------------------------------------------------
// Dispatch by name

enum class Measure { I2, discord, I3, J3, K3, D1, D2 };

std::string to_string(Measure m);
/// Throws InvalidParam for unknown names.
Measure parse_measure(std::string_view name);
bool measure_uses_angle(Measure m) noexcept;

struct MeasureValue {
  Measure measure = Measure::D1;
  double value = 0.0;
  std::optional<double> t;  // absent for J3
  QubitLabeling labeling;
  int num_qubits = 3;
  std::string state_descriptor;
};

/// Evaluates `m` at angle t. Two-qubit states support I2 and discord only (X kept,
/// Y measured); on three qubits I2 acts on rho_XY and discord is D(X : Y,Z).
double evaluate_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& labeling, double t);
MeasureValue compute_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& labeling, double t,
                             std::string state_descriptor = {});

/// Minimizes D1, D2 or discord over t.
MinimizationResult minimize_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& labeling,
                                    const MinimizerConfig& config = {});

}  // namespace dissension
