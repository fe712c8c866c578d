#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dissension/linalg.hpp"
#include "dissension/states.hpp"

namespace dissension {

// State files are JSON objects {"n": <qubits>, "matrix": [[[re, im], ...], ...]}.

/// Parses the matrix without checking the density-matrix invariants. Throws NotAState
/// when the document does not follow the schema.
ComplexMatrix parse_state_json(const std::string& text);
/// Throws IoError when the file cannot be read.
ComplexMatrix read_state_file(const std::filesystem::path& path);

std::string state_to_json(const ComplexMatrix& m);
inline std::string state_to_json(const DensityMatrix& rho) { return state_to_json(rho.matrix()); }

}  // namespace dissension
