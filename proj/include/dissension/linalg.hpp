#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dissension {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for the 1..8 dimensional
/// operators of at most three qubits, but nothing here depends on that.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  /// |ket><ket|
  static ComplexMatrix projector(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);
  ComplexMatrix& operator/=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator/(ComplexMatrix lhs, Complex s) { return lhs /= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Eigenvalues sorted non-increasing, with multiplicity.
struct RealSpectrum {
  std::vector<double> values;
  std::size_t dim() const noexcept { return values.size(); }
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& m);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_deviation(const ComplexMatrix& m);

inline constexpr double kDefaultHermiticityTol = 1e-9;

/// Throws NotHermitian when max|M - M^dagger| exceeds the tolerance.
RealSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double hermiticity_tol = kDefaultHermiticityTol);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

namespace detail {
// Square root of a positive semidefinite Hermitian matrix; negative eigenvalues are
// clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);
}  // namespace detail

}  // namespace dissension
