#pragma once

#include <cstddef>

#include "svbound/log_magnitude.hpp"
#include "svbound/matrix.hpp"

namespace svbound {

// Scalars shared by every bound: dimension, squared Frobenius norm,
// |det A|^2 in log form and the Gram matrix A^H A.
struct BoundContext {
  std::size_t n;
  double frob_sq;
  LogMagnitude log_det_sq;
  ComplexMatrix gram;
};

// Throws DimensionError when A is not square or n < 2, SingularMatrixError
// when an LU pivot of A is exactly zero.
BoundContext build_context(const ComplexMatrix& a);

}  // namespace svbound
