#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dissension/linalg.hpp"

namespace dissension {

/// Physical qubit position. Position 0 is the most significant bit of the basis index.
using Qubit = int;

inline constexpr double kStateTolerance = 1e-9;
/// Measurement branches at or below this probability are treated as unreachable.
inline constexpr double kBranchCutoff = 1e-12;

namespace detail {
struct Unvalidated {};
}  // namespace detail

/// Result of checking a candidate matrix against the density-matrix invariants.
struct StateDiagnostics {
  int num_qubits = 0;
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  std::optional<double> min_eigenvalue;  // unset when the matrix is not Hermitian
  std::optional<std::string> violation;  // first invariant violated, if any

  bool valid() const noexcept { return !violation.has_value(); }
};

StateDiagnostics diagnose_state(const ComplexMatrix& m);

/// Hermitian, unit-trace, PSD operator on 1 to 3 qubits. Immutable.
class DensityMatrix {
 public:
  /// Throws NotAState when the matrix violates an invariant.
  explicit DensityMatrix(ComplexMatrix m);
  /// Library-internal: skips validation for matrices that are states by construction.
  DensityMatrix(ComplexMatrix m, detail::Unvalidated);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
  int num_qubits_ = 0;
};

enum class StateFamily { ghz, w, mixed_ghz, mixed_w, biseparable, pure_vector, raw_matrix };

std::string to_string(StateFamily family);

struct StateSpec {
  StateFamily family = StateFamily::ghz;
  /// Mixing weight for mixed_ghz / mixed_w; weight a (with b = 1/2 - a) for biseparable.
  double a = 0.0;
  std::vector<Complex> amplitudes;  // pure_vector
  ComplexMatrix matrix;             // raw_matrix

  static StateSpec ghz() { return with(StateFamily::ghz); }
  static StateSpec w() { return with(StateFamily::w); }
  static StateSpec mixed_ghz(double a) { return with(StateFamily::mixed_ghz, a); }
  static StateSpec mixed_w(double a) { return with(StateFamily::mixed_w, a); }
  static StateSpec biseparable(double a = 0.25) { return with(StateFamily::biseparable, a); }
  static StateSpec pure(std::vector<Complex> amplitudes) {
    StateSpec s = with(StateFamily::pure_vector);
    s.amplitudes = std::move(amplitudes);
    return s;
  }
  static StateSpec raw(ComplexMatrix m) {
    StateSpec s = with(StateFamily::raw_matrix);
    s.matrix = std::move(m);
    return s;
  }

  bool has_mixing_weight() const noexcept;
  /// Short text tag, e.g. "ghz" or "mixed_w(a=0.3)".
  std::string descriptor() const;

 private:
  static StateSpec with(StateFamily f, double a = 0.0) {
    StateSpec s;
    s.family = f;
    s.a = a;
    return s;
  }
};

/// Throws InvalidParam for out-of-range weights or unnormalized amplitudes, NotAState
/// for raw matrices that are not states.
DensityMatrix make_state(const StateSpec& spec);

/// Reduced state over `keep`, in the listed order (first listed = most significant).
/// `keep` must be a nonempty strict subset of the qubits without duplicates.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Qubit> keep);

/// Like partial_trace, but `keep` may name every qubit (a reordering).
DensityMatrix reduce_to(const DensityMatrix& rho, std::span<const Qubit> keep);

struct ProjectionOutcome {
  double probability = 0.0;
  std::optional<DensityMatrix> post_state;
};

/// p = Tr(P rho P) clamped to [0, 1]; post state P rho P / p when p > kBranchCutoff.
/// Throws NotProjector unless P is Hermitian and idempotent within 1e-9.
ProjectionOutcome project(const DensityMatrix& rho, const ComplexMatrix& projector);

/// Operator acting as `op` on `targets` (in order) and identity elsewhere.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const Qubit> targets, int total_qubits);
ComplexMatrix embed_operator(const ComplexMatrix& op, std::initializer_list<Qubit> targets, int total_qubits);

}  // namespace dissension
