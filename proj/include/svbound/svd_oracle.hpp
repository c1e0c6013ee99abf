#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "svbound/matrix.hpp"

namespace svbound {

// Singular values in descending order, all finite and nonnegative.
class Spectrum {
 public:
  // Throws DomainError if values are unsorted, negative or non-finite.
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double sigma_max() const noexcept { return values_.front(); }
  double sigma_min() const noexcept { return values_.back(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

inline constexpr std::size_t kOracleMaxDim = 64;
inline constexpr double kDefaultSweepTol = 1e-14;

// Eigenvalues of a Hermitian matrix by cyclic-by-row complex Jacobi
// rotations, unsorted. Stops once the off-diagonal Frobenius mass is at most
// sweep_tol times the diagonal mass; a diagonal input takes zero sweeps.
// Throws DomainError for non-Hermitian input (1e-10 relative), DimensionError
// above kOracleMaxDim, ConvergenceError after 30 sweeps.
std::vector<double> jacobi_hermitian_eigen(const ComplexMatrix& g,
                                           double sweep_tol = kDefaultSweepTol);

// Square roots of the Gram eigenvalues. Eigenvalues below -1e-10 ||A||_F^2
// raise DomainError; smaller negatives are clamped to zero.
Spectrum singular_values(const ComplexMatrix& a);

// |a - sigma_min| <= tol.
bool prop1_exactness(const Spectrum& spectrum, double a, double tol);

// max(sigma_1..sigma_{n-1}) - min(sigma_1..sigma_{n-1}) <= tol * sigma_1.
bool leading_values_equal(const Spectrum& spectrum, double tol);

}  // namespace svbound
