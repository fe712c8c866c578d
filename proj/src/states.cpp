#include "dissension/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dissension/errors.hpp"

namespace dissension {

namespace {

int qubits_for_dim(std::size_t dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: return 0;
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_roles(std::span<const Qubit> roles, int total_qubits, bool allow_all) {
  if (roles.empty()) throw BadSubset("qubit subset must not be empty");
  std::vector<bool> seen(static_cast<std::size_t>(std::max(total_qubits, 0)), false);
  for (Qubit q : roles) {
    if (q < 0 || q >= total_qubits) {
      throw BadSubset("qubit " + std::to_string(q) + " out of range for a " + std::to_string(total_qubits) +
                      "-qubit system");
    }
    if (seen[q]) throw BadSubset("qubit " + std::to_string(q) + " listed twice");
    seen[q] = true;
  }
  if (!allow_all && static_cast<int>(roles.size()) == total_qubits) {
    throw BadSubset("qubit subset must be a strict subset of the system");
  }
}

// Maps (index over `selected`, index over the remaining qubits) to a global basis index.
class IndexSplit {
 public:
  IndexSplit(std::span<const Qubit> selected, int total) : total_(total), selected_(selected.begin(), selected.end()) {
    for (Qubit q = 0; q < total; ++q)
      if (std::find(selected_.begin(), selected_.end(), q) == selected_.end()) rest_.push_back(q);
  }

  std::size_t selected_dim() const { return std::size_t{1} << selected_.size(); }
  std::size_t rest_dim() const { return std::size_t{1} << rest_.size(); }

  std::size_t global(std::size_t sub, std::size_t rest) const {
    std::size_t idx = 0;
    place(idx, sub, selected_);
    place(idx, rest, rest_);
    return idx;
  }

 private:
  void place(std::size_t& idx, std::size_t local, const std::vector<Qubit>& qubits) const {
    const std::size_t k = qubits.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t bit = (local >> (k - 1 - i)) & 1u;
      idx |= bit << (total_ - 1 - qubits[i]);
    }
  }

  int total_;
  std::vector<Qubit> selected_;
  std::vector<Qubit> rest_;
};

ComplexMatrix pure_projector(std::span<const Complex> amplitudes) { return ComplexMatrix::projector(amplitudes); }

ComplexMatrix ghz_projector() {
  std::vector<Complex> amp(8);
  amp[0] = amp[7] = 1.0 / std::sqrt(2.0);
  return pure_projector(amp);
}

ComplexMatrix w_projector() {
  std::vector<Complex> amp(8);
  amp[4] = amp[2] = amp[1] = 1.0 / std::sqrt(3.0);
  return pure_projector(amp);
}

ComplexMatrix white_noise_mixture(const ComplexMatrix& pure, double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidParam("mixing weight a=" + format_number(a) + " outside [0, 1]");
  return (1.0 - a) / 8.0 * ComplexMatrix::identity(8) + a * pure;
}

ComplexMatrix biseparable_matrix(double a) {
  if (!(a >= 0.0 && a <= 0.5)) throw InvalidParam("biseparable weight a=" + format_number(a) + " outside [0, 1/2]");
  const double b = 0.5 - a;
  ComplexMatrix m(8);
  constexpr std::size_t k000 = 0, k001 = 1, k010 = 2, k011 = 3;
  m(k000, k000) = a;
  m(k011, k011) = a;
  m(k000, k011) = a;
  m(k011, k000) = a;
  m(k001, k001) = b;
  m(k010, k010) = b;
  m(k001, k010) = -b;
  m(k010, k001) = -b;
  return m;
}

}  // namespace

StateDiagnostics diagnose_state(const ComplexMatrix& m) {
  StateDiagnostics diag;
  diag.num_qubits = qubits_for_dim(m.dim());
  if (diag.num_qubits == 0) {
    diag.violation = "dimension " + std::to_string(m.dim()) + " is not 2, 4 or 8";
    return diag;
  }
  diag.hermiticity_deviation = hermiticity_deviation(m);
  diag.trace_deviation = std::abs(trace(m) - 1.0);
  if (diag.hermiticity_deviation <= kStateTolerance) {
    diag.min_eigenvalue = hermitian_eigenvalues(m).values.back();
  }
  if (diag.hermiticity_deviation > kStateTolerance) {
    diag.violation = "hermiticity deviation " + format_number(diag.hermiticity_deviation);
  } else if (diag.trace_deviation > kStateTolerance) {
    diag.violation = "trace deviation " + format_number(diag.trace_deviation);
  } else if (*diag.min_eigenvalue < -kStateTolerance) {
    diag.violation = "negative eigenvalue " + format_number(*diag.min_eigenvalue);
  }
  return diag;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) {
  const StateDiagnostics diag = diagnose_state(m);
  if (!diag.valid()) throw NotAState("not a density matrix: " + *diag.violation);
  num_qubits_ = diag.num_qubits;
  matrix_ = std::move(m);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, detail::Unvalidated)
    : matrix_(std::move(m)), num_qubits_(qubits_for_dim(matrix_.dim())) {}

std::string to_string(StateFamily family) {
  switch (family) {
    case StateFamily::ghz: return "ghz";
    case StateFamily::w: return "w";
    case StateFamily::mixed_ghz: return "mixed_ghz";
    case StateFamily::mixed_w: return "mixed_w";
    case StateFamily::biseparable: return "biseparable";
    case StateFamily::pure_vector: return "pure_vector";
    case StateFamily::raw_matrix: return "raw_matrix";
  }
  return "unknown";
}

bool StateSpec::has_mixing_weight() const noexcept {
  return family == StateFamily::mixed_ghz || family == StateFamily::mixed_w || family == StateFamily::biseparable;
}

std::string StateSpec::descriptor() const {
  if (!has_mixing_weight()) return to_string(family);
  return to_string(family) + "(a=" + format_number(a) + ")";
}

DensityMatrix make_state(const StateSpec& spec) {
  const detail::Unvalidated trusted;
  switch (spec.family) {
    case StateFamily::ghz: return {ghz_projector(), trusted};
    case StateFamily::w: return {w_projector(), trusted};
    case StateFamily::mixed_ghz: return {white_noise_mixture(ghz_projector(), spec.a), trusted};
    case StateFamily::mixed_w: return {white_noise_mixture(w_projector(), spec.a), trusted};
    case StateFamily::biseparable: return {biseparable_matrix(spec.a), trusted};
    case StateFamily::pure_vector: {
      if (qubits_for_dim(spec.amplitudes.size()) == 0) {
        throw InvalidParam("pure state needs 2, 4 or 8 amplitudes, got " + std::to_string(spec.amplitudes.size()));
      }
      const double norm2 = std::accumulate(spec.amplitudes.begin(), spec.amplitudes.end(), 0.0,
                                           [](double acc, Complex c) { return acc + std::norm(c); });
      if (std::abs(std::sqrt(norm2) - 1.0) > kStateTolerance) {
        throw InvalidParam("pure state amplitudes have norm " + format_number(std::sqrt(norm2)));
      }
      return {pure_projector(spec.amplitudes), trusted};
    }
    case StateFamily::raw_matrix: return DensityMatrix(spec.matrix);
  }
  throw InvalidParam("unknown state family");
}

DensityMatrix reduce_to(const DensityMatrix& rho, std::span<const Qubit> keep) {
  check_roles(keep, rho.num_qubits(), true);
  const IndexSplit split(keep, rho.num_qubits());
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(split.selected_dim());
  for (std::size_t i = 0; i < split.selected_dim(); ++i)
    for (std::size_t j = 0; j < split.selected_dim(); ++j) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < split.rest_dim(); ++r) sum += m(split.global(i, r), split.global(j, r));
      out(i, j) = sum;
    }
  return {std::move(out), detail::Unvalidated{}};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep) {
  check_roles(keep, rho.num_qubits(), false);
  return reduce_to(rho, keep);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Qubit> keep) {
  return partial_trace(rho, std::span<const Qubit>(keep.begin(), keep.size()));
}

ProjectionOutcome project(const DensityMatrix& rho, const ComplexMatrix& projector) {
  if (projector.dim() != rho.dim()) {
    throw NotProjector("projector dimension " + std::to_string(projector.dim()) + " does not match state dimension " +
                       std::to_string(rho.dim()));
  }
  const double herm = hermiticity_deviation(projector);
  if (herm > kStateTolerance) throw NotProjector("projector not Hermitian: deviation " + format_number(herm));
  const double idem = max_abs_deviation(projector * projector, projector);
  if (idem > kStateTolerance) throw NotProjector("projector not idempotent: deviation " + format_number(idem));

  ComplexMatrix branch = projector * rho.matrix() * projector;
  ProjectionOutcome outcome;
  outcome.probability = std::clamp(trace(branch).real(), 0.0, 1.0);
  if (outcome.probability > kBranchCutoff) {
    outcome.post_state.emplace(branch / outcome.probability, detail::Unvalidated{});
  }
  return outcome;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const Qubit> targets, int total_qubits) {
  check_roles(targets, total_qubits, true);
  const IndexSplit split(targets, total_qubits);
  if (op.dim() != split.selected_dim()) {
    throw BadSubset("operator of dimension " + std::to_string(op.dim()) + " cannot act on " +
                    std::to_string(targets.size()) + " qubit(s)");
  }
  ComplexMatrix out(std::size_t{1} << total_qubits);
  for (std::size_t r = 0; r < split.rest_dim(); ++r)
    for (std::size_t i = 0; i < split.selected_dim(); ++i)
      for (std::size_t j = 0; j < split.selected_dim(); ++j) out(split.global(i, r), split.global(j, r)) = op(i, j);
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::initializer_list<Qubit> targets, int total_qubits) {
  return embed_operator(op, std::span<const Qubit>(targets.begin(), targets.size()), total_qubits);
}

}  // namespace dissension
