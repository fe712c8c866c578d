#include "dissension/random_states.hpp"

#include <cmath>

#include "dissension/errors.hpp"

namespace dissension {

namespace {

std::size_t dim_for(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 3) throw InvalidParam("random states support 1 to 3 qubits");
  return std::size_t{1} << num_qubits;
}

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

DensityMatrix random_pure_state(int num_qubits, std::mt19937_64& rng) {
  std::vector<Complex> amp(dim_for(num_qubits));
  double norm2 = 0.0;
  for (auto& a : amp) {
    a = gaussian(rng);
    norm2 += std::norm(a);
  }
  for (auto& a : amp) a /= std::sqrt(norm2);
  return make_state(StateSpec::pure(std::move(amp)));
}

DensityMatrix random_mixed_state(int num_qubits, std::mt19937_64& rng) {
  const std::size_t dim = dim_for(num_qubits);
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = gaussian(rng);
  ComplexMatrix rho = g * adjoint(g);
  rho /= trace(rho).real();
  // Exact Hermitian symmetry; the product leaves ~1e-16 asymmetry.
  rho = 0.5 * (rho + adjoint(rho));
  return DensityMatrix(std::move(rho));
}

}  // namespace dissension
