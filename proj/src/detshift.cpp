#include "svbound/detshift.hpp"

#include <cmath>
#include <vector>

#include "svbound/errors.hpp"

namespace svbound {

namespace {

LogMagnitude lu_logdet_inplace(std::vector<Complex>& lu, std::size_t n) {
  double log_mag = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_abs = std::abs(lu[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu[r * n + col]);
      if (v > pivot_abs) {
        pivot_abs = v;
        pivot_row = r;
      }
    }
    if (pivot_abs == 0.0) return LogMagnitude::zero();
    if (pivot_row != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(lu[col * n + j], lu[pivot_row * n + j]);
    }
    log_mag += std::log(pivot_abs);
    const Complex pivot = lu[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu[r * n + col] / pivot;
      if (factor == Complex(0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu[r * n + j] -= factor * lu[col * n + j];
    }
  }
  return LogMagnitude::from_log(log_mag);
}

}  // namespace

LogMagnitude lu_logdet(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("lu_logdet: matrix must be square");
  std::vector<Complex> lu(m.entries().begin(), m.entries().end());
  return lu_logdet_inplace(lu, m.rows());
}

LogMagnitude shifted_gram_logdet(const BoundContext& ctx, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("shift must be finite and nonnegative");
  }
  const std::size_t n = ctx.gram.rows();
  std::vector<Complex> shifted(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted[i * n + j] = -ctx.gram(i, j);
    shifted[i * n + i] += lambda;
  }
  return lu_logdet_inplace(shifted, n);
}

}  // namespace svbound
