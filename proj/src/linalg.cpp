#include "dissension/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "dissension/errors.hpp"

namespace dissension {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

EigenMatrix to_eigen(const ComplexMatrix& m) {
  EigenMatrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

void require_hermitian(const ComplexMatrix& m, double tol) {
  const double dev = hermiticity_deviation(m);
  if (dev > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max deviation " << dev << " exceeds " << tol;
    throw NotHermitian(msg.str(), dev);
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("expected " + std::to_string(dim * dim) + " entries, got " +
                                std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix rows must all have length " + std::to_string(dim_));
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  std::transform(data_.begin(), data_.end(), rhs.data_.begin(), data_.begin(), std::plus<>{});
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  std::transform(data_.begin(), data_.end(), rhs.data_.begin(), data_.begin(), std::minus<>{});
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator/=(Complex s) {
  for (auto& v : data_) v /= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) sum += m(i, i);
  return sum;
}

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double dev = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    dev = std::max(dev, std::abs(a.entries()[i] - b.entries()[i]));
  return dev;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  double dev = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

RealSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double hermiticity_tol) {
  require_hermitian(m, hermiticity_tol);
  RealSpectrum spectrum;
  const std::size_t n = m.dim();
  if (n == 1) {
    spectrum.values = {m(0, 0).real()};
  } else if (n == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    // Average the off-diagonal pair so a tolerated Hermiticity defect does not bias the result.
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    spectrum.values = {mean + radius, mean - radius};
  } else {
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigenvalue solver did not converge");
    const auto& ev = solver.eigenvalues();
    spectrum.values.assign(ev.data(), ev.data() + ev.size());
    std::sort(spectrum.values.begin(), spectrum.values.end(), std::greater<>{});
  }
  return spectrum;
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

namespace detail {

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  require_hermitian(m, kDefaultHermiticityTol);
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigen solver did not converge");
  const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const EigenMatrix root = solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = root(i, j);
  return out;
}

}  // namespace detail

}  // namespace dissension
