#pragma once

#include <cstdint>
#include <random>

#include "dissension/states.hpp"

namespace dissension {

/// Normalized complex Gaussian amplitudes.
DensityMatrix random_pure_state(int num_qubits, std::mt19937_64& rng);
/// G G^dagger / Tr(G G^dagger) with G a complex Gaussian square matrix (full rank almost surely).
DensityMatrix random_mixed_state(int num_qubits, std::mt19937_64& rng);

}  // namespace dissension
