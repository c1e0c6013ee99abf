#include "svbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "svbound/errors.hpp"

namespace svbound {

namespace {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                         std::to_string(rows_ * cols_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!is_finite(entries_[k])) {
      throw DomainError("non-finite matrix entry at (" + std::to_string(k / cols_) + ", " +
                        std::to_string(k % cols_) + ")");
    }
  }
}

namespace {

std::size_t column_count(std::initializer_list<std::initializer_list<Complex>> rows) {
  return rows.size() == 0 ? 0 : rows.begin()->size();
}

std::vector<Complex> flatten(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n_cols = column_count(rows);
  std::vector<Complex> out;
  out.reserve(rows.size() * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw DimensionError("ragged matrix initializer");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size(), column_count(rows), flatten(rows)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = std::conj((*this)(i, j));
  }
  return ComplexMatrix(cols_, rows_, std::move(e));
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  std::vector<Complex> e(entries_);
  for (auto& z : e) z *= factor;
  return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DimensionError("matrix product shape mismatch");
  const std::size_t m = lhs.rows(), k = lhs.cols(), n = rhs.cols();
  std::vector<Complex> e(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const Complex a = lhs(i, p);
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += a * rhs(p, j);
    }
  }
  return ComplexMatrix(m, n, std::move(e));
}

double frobenius_sq(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return sum;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("gram: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t p = 0; p < n; ++p) acc += std::conj(a(p, i)) * a(p, j);
      m[i * n + j] = acc;
    }
  }
  std::vector<Complex> sym(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    sym[i * n + i] = m[i * n + i].real();
    for (std::size_t j = 0; j < i; ++j) {
      const Complex v = 0.5 * (m[i * n + j] + std::conj(m[j * n + i]));
      sym[i * n + j] = v;
      sym[j * n + i] = std::conj(v);
    }
  }
  return ComplexMatrix(n, n, std::move(sym));
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double scale = 0.0, defect = 0.0;
  for (const auto& z : m.entries()) scale = std::max(scale, std::abs(z));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return scale == 0.0 ? 0.0 : defect / scale;
}

}  // namespace svbound
