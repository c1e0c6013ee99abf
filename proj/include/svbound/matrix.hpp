#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace svbound {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Immutable once built; every entry is
// finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix conjugate_transpose() const;
  ComplexMatrix scaled(Complex factor) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// Sum of squared entry moduli, i.e. the squared Frobenius norm.
double frobenius_sq(const ComplexMatrix& a);

// A^H A, symmetrized as (M + M^H)/2 so the result is exactly Hermitian.
// Throws DimensionError for non-square input.
ComplexMatrix gram(const ComplexMatrix& a);

// Largest elementwise deviation |m_ij - conj(m_ji)| relative to max |m_ij|.
double hermitian_defect(const ComplexMatrix& m);

}  // namespace svbound
