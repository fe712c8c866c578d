#include "dissension/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dissension/errors.hpp"

namespace dissension {

namespace {

std::span<const Qubit> as_span(std::initializer_list<Qubit> roles) { return {roles.begin(), roles.size()}; }

void require_qubits(const DensityMatrix& rho, int n, std::string_view what) {
  if (rho.num_qubits() != n) {
    throw InvalidParam(std::string(what) + " needs a " + std::to_string(n) + "-qubit state, got " +
                       std::to_string(rho.num_qubits()) + " qubit(s)");
  }
}

const DensityMatrix& require_three(const DensityMatrix& rho, const QubitLabeling& labeling, std::string_view what) {
  require_qubits(rho, 3, what);
  labeling.validate();
  return rho;
}

// Terms of D1 shared by the fixed-angle and independent-angle variants.
struct D1Terms {
  double h_x, h_y, h_z, h_xy, h_xz, h_yz, h_xyz;

  D1Terms(const DensityMatrix& rho, const QubitLabeling& l)
      : h_x(subsystem_entropy(rho, {l.x})),
        h_y(subsystem_entropy(rho, {l.y})),
        h_z(subsystem_entropy(rho, {l.z})),
        h_xy(subsystem_entropy(rho, {l.x, l.y})),
        h_xz(subsystem_entropy(rho, {l.x, l.z})),
        h_yz(subsystem_entropy(rho, {l.y, l.z})),
        h_xyz(von_neumann_entropy(rho)) {}

  double unconditioned() const { return h_xz + h_yz + 2.0 * h_xy - h_xyz - (h_x + h_y + h_z); }
};

// Part of D1 that depends on the angle of the measurement on Z.
double d1_z_terms(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  return conditional_entropy(rho, {l.x, l.y}, {l.z}, t) - conditional_entropy(rho, {l.x}, {l.z}, t) -
         conditional_entropy(rho, {l.y}, {l.z}, t);
}

}  // namespace

void QubitLabeling::validate() const {
  auto r = roles();
  std::sort(r.begin(), r.end());
  if (r != std::array<Qubit, 3>{0, 1, 2}) {
    throw InvalidParam("labeling (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                       ") is not a permutation of (0,1,2)");
  }
}

SingleQubitBasis::SingleQubitBasis(double t) : t_(t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const std::array<Complex, 2> u1{c, s};
  const std::array<Complex, 2> u2{s, -c};
  projectors_ = {ComplexMatrix::projector(u1), ComplexMatrix::projector(u2)};
}

TwoQubitBasis::TwoQubitBasis(double t) : t_(t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  // Amplitudes over |00>, |01>, |10>, |11>.
  const std::array<Complex, 4> v1{c, 0.0, 0.0, s};
  const std::array<Complex, 4> v2{-s, 0.0, 0.0, c};
  const std::array<Complex, 4> v3{0.0, c, s, 0.0};
  const std::array<Complex, 4> v4{0.0, -s, c, 0.0};
  projectors_ = {ComplexMatrix::projector(v1), ComplexMatrix::projector(v2), ComplexMatrix::projector(v3),
                 ComplexMatrix::projector(v4)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix()).values) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

double subsystem_entropy(const DensityMatrix& rho, std::span<const Qubit> roles) {
  if (static_cast<int>(roles.size()) == rho.num_qubits()) return von_neumann_entropy(reduce_to(rho, roles));
  return von_neumann_entropy(partial_trace(rho, roles));
}

double subsystem_entropy(const DensityMatrix& rho, std::initializer_list<Qubit> roles) {
  return subsystem_entropy(rho, as_span(roles));
}

double shannon_pair(double x, double y) {
  if (x < 0.0 || y < 0.0) throw NegativeArgument("shannon_pair needs non-negative arguments");
  auto term = [](double v) { return v > 0.0 ? -v * std::log2(v) : 0.0; };
  return term(x) + term(y);
}

double conditional_entropy(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured,
                           double t) {
  if (kept.empty() || measured.empty()) throw BadSubset("kept and measured qubits must be nonempty");
  if (measured.size() > 2) throw BadSubset("measurements act on one or two qubits");
  for (Qubit q : measured)
    if (std::find(kept.begin(), kept.end(), q) != kept.end()) {
      throw BadSubset("qubit " + std::to_string(q) + " is both kept and measured");
    }

  std::vector<Qubit> order(kept.begin(), kept.end());
  order.insert(order.end(), measured.begin(), measured.end());
  const DensityMatrix sub = reduce_to(rho, order);

  const std::size_t kept_dim = std::size_t{1} << kept.size();
  const ComplexMatrix kept_identity = ComplexMatrix::identity(kept_dim);
  std::vector<Qubit> kept_positions(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept_positions[i] = static_cast<Qubit>(i);

  auto accumulate = [&](const auto& projectors) {
    double h = 0.0;
    for (const auto& p : projectors) {
      const ProjectionOutcome outcome = project(sub, kron(kept_identity, p));
      if (!outcome.post_state) continue;
      h += outcome.probability * von_neumann_entropy(partial_trace(*outcome.post_state, kept_positions));
    }
    return h;
  };
  if (measured.size() == 1) return accumulate(SingleQubitBasis(t).projectors());
  return accumulate(TwoQubitBasis(t).projectors());
}

double conditional_entropy(const DensityMatrix& rho, std::initializer_list<Qubit> kept,
                           std::initializer_list<Qubit> measured, double t) {
  return conditional_entropy(rho, as_span(kept), as_span(measured), t);
}

double mutual_information_2(const DensityMatrix& rho, double t, Qubit kept, Qubit measured) {
  return subsystem_entropy(rho, {kept}) - conditional_entropy(rho, {kept}, {measured}, t);
}

double discord(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured, double t) {
  std::vector<Qubit> joint(kept.begin(), kept.end());
  joint.insert(joint.end(), measured.begin(), measured.end());
  return subsystem_entropy(rho, measured) - subsystem_entropy(rho, joint) +
         conditional_entropy(rho, kept, measured, t);
}

double discord(const DensityMatrix& rho, std::initializer_list<Qubit> kept, std::initializer_list<Qubit> measured,
               double t) {
  return discord(rho, as_span(kept), as_span(measured), t);
}

MinimizationResult min_discord(const DensityMatrix& rho, std::span<const Qubit> kept, std::span<const Qubit> measured,
                               const MinimizerConfig& config) {
  return minimize_over_t([&](double t) { return discord(rho, kept, measured, t); }, config);
}

MinimizationResult min_discord(const DensityMatrix& rho, std::initializer_list<Qubit> kept,
                               std::initializer_list<Qubit> measured, const MinimizerConfig& config) {
  return min_discord(rho, as_span(kept), as_span(measured), config);
}

double concurrence(const DensityMatrix& rho) {
  require_qubits(rho, 2, "concurrence");
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * conjugate(rho.matrix()) * yy;
  const ComplexMatrix root = detail::psd_sqrt(rho.matrix());
  ComplexMatrix r = root * flipped * root;
  r = 0.5 * (r + adjoint(r));
  std::vector<double> lambdas = hermitian_eigenvalues(r).values;
  for (double& l : lambdas) l = std::sqrt(std::max(l, 0.0));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>{});
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::clamp(c, 0.0, 1.0);
}

double J3(const DensityMatrix& rho, const QubitLabeling& l) {
  require_three(rho, l, "J3");
  const D1Terms h(rho, l);
  return h.h_x + h.h_y + h.h_z - h.h_xy - h.h_xz - h.h_yz + h.h_xyz;
}

double I3(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "I3");
  return subsystem_entropy(rho, {l.x, l.y}) - conditional_entropy(rho, {l.y}, {l.x}, t) -
         conditional_entropy(rho, {l.x}, {l.y}, t) - conditional_entropy(rho, {l.x}, {l.z}, t) -
         conditional_entropy(rho, {l.y}, {l.z}, t) + conditional_entropy(rho, {l.x, l.y}, {l.z}, t);
}

double K3(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "K3");
  return subsystem_entropy(rho, {l.x}) + subsystem_entropy(rho, {l.y}) + subsystem_entropy(rho, {l.z}) -
         subsystem_entropy(rho, {l.x, l.y}) - subsystem_entropy(rho, {l.x, l.z}) +
         conditional_entropy(rho, {l.x}, {l.y, l.z}, t);
}

double D1(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "D1");
  const D1Terms h(rho, l);
  return h.unconditioned() + d1_z_terms(rho, l, t) - conditional_entropy(rho, {l.x}, {l.y}, t) -
         conditional_entropy(rho, {l.y}, {l.x}, t);
}

double D2(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "D2");
  return conditional_entropy(rho, {l.x}, {l.y, l.z}, t) + subsystem_entropy(rho, {l.y, l.z}) -
         von_neumann_entropy(rho);
}

double d1_via_discords(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "d1_via_discords");
  return discord(rho, {l.x, l.y}, {l.z}, t) - discord(rho, {l.x}, {l.z}, t) - discord(rho, {l.y}, {l.z}, t) -
         discord(rho, {l.x}, {l.y}, t) - discord(rho, {l.y}, {l.x}, t);
}

MinimizationResult delta1(const DensityMatrix& rho, const QubitLabeling& l, const MinimizerConfig& config) {
  require_three(rho, l, "delta1");
  return minimize_over_t([&](double t) { return D1(rho, l, t); }, config);
}

MinimizationResult delta2(const DensityMatrix& rho, const QubitLabeling& l, const MinimizerConfig& config) {
  require_three(rho, l, "delta2");
  return minimize_over_t([&](double t) { return D2(rho, l, t); }, config);
}

double D1_independent(const DensityMatrix& rho, const QubitLabeling& l, const MeasurementAngles& angles) {
  require_three(rho, l, "D1");
  const D1Terms h(rho, l);
  return h.unconditioned() + d1_z_terms(rho, l, angles.on_z) - conditional_entropy(rho, {l.x}, {l.y}, angles.on_y) -
         conditional_entropy(rho, {l.y}, {l.x}, angles.on_x);
}

IndependentMinimization delta1_independent(const DensityMatrix& rho, const QubitLabeling& l,
                                           const MinimizerConfig& config) {
  require_three(rho, l, "delta1");
  const D1Terms h(rho, l);
  const auto on_z = minimize_over_t([&](double t) { return d1_z_terms(rho, l, t); }, config);
  const auto on_y = minimize_over_t([&](double t) { return -conditional_entropy(rho, {l.x}, {l.y}, t); }, config);
  const auto on_x = minimize_over_t([&](double t) { return -conditional_entropy(rho, {l.y}, {l.x}, t); }, config);

  IndependentMinimization out;
  out.value = h.unconditioned() + on_z.value + on_y.value + on_x.value;
  out.argmin = {on_x.argmin_t, on_y.argmin_t, on_z.argmin_t};
  out.evaluations = on_z.evaluations + on_y.evaluations + on_x.evaluations;
  return out;
}

ThreeVariableMi three_variable_mi(const DensityMatrix& rho, const QubitLabeling& l, double t) {
  require_three(rho, l, "three-variable mutual information");
  ThreeVariableMi out;
  out.i2 = mutual_information_2(rho, t, l.x, l.y);
  out.cond_mi = conditional_entropy(rho, {l.x}, {l.z}, t) + conditional_entropy(rho, {l.y}, {l.z}, t) -
                conditional_entropy(rho, {l.x, l.y}, {l.z}, t);
  out.i3 = out.i2 - out.cond_mi;
  return out;
}

ThreeVariableMi negative_mi_demo() { return three_variable_mi(make_state(StateSpec::ghz()), {}, std::numbers::pi / 4); }

std::string to_string(Measure m) {
  switch (m) {
    case Measure::I2: return "I2";
    case Measure::discord: return "discord";
    case Measure::I3: return "I3";
    case Measure::J3: return "J3";
    case Measure::K3: return "K3";
    case Measure::D1: return "D1";
    case Measure::D2: return "D2";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : {Measure::I2, Measure::discord, Measure::I3, Measure::J3, Measure::K3, Measure::D1, Measure::D2})
    if (to_string(m) == name) return m;
  throw InvalidParam("unknown measure '" + std::string(name) + "'");
}

bool measure_uses_angle(Measure m) noexcept { return m != Measure::J3; }

double evaluate_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& l, double t) {
  if (rho.num_qubits() == 2) {
    if (l.x == l.y || l.x < 0 || l.x > 1 || l.y < 0 || l.y > 1) {
      throw InvalidParam("two-qubit labeling must be a permutation of (0,1)");
    }
    if (m == Measure::I2) return mutual_information_2(rho, t, l.x, l.y);
    if (m == Measure::discord) return discord(rho, {l.x}, {l.y}, t);
    throw InvalidParam("measure " + to_string(m) + " needs a three-qubit state");
  }
  require_three(rho, l, to_string(m));
  switch (m) {
    case Measure::I2: return mutual_information_2(rho, t, l.x, l.y);
    case Measure::discord: return discord(rho, {l.x}, {l.y, l.z}, t);
    case Measure::I3: return I3(rho, l, t);
    case Measure::J3: return J3(rho, l);
    case Measure::K3: return K3(rho, l, t);
    case Measure::D1: return D1(rho, l, t);
    case Measure::D2: return D2(rho, l, t);
  }
  throw InvalidParam("unknown measure");
}

MeasureValue compute_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& l, double t,
                             std::string state_descriptor) {
  MeasureValue out;
  out.measure = m;
  out.value = evaluate_measure(m, rho, l, t);
  if (measure_uses_angle(m)) out.t = t;
  out.labeling = l;
  out.num_qubits = rho.num_qubits();
  out.state_descriptor = std::move(state_descriptor);
  return out;
}

MinimizationResult minimize_measure(Measure m, const DensityMatrix& rho, const QubitLabeling& l,
                                    const MinimizerConfig& config) {
  switch (m) {
    case Measure::D1: return delta1(rho, l, config);
    case Measure::D2: return delta2(rho, l, config);
    case Measure::discord:
      evaluate_measure(m, rho, l, 0.0);  // argument checks before the scan
      return minimize_over_t([&](double t) { return evaluate_measure(m, rho, l, t); }, config);
    default: throw InvalidParam("minimization is defined for D1, D2 and discord, not " + to_string(m));
  }
}

}  // namespace dissension
