#include "svbound/context.hpp"

#include "svbound/detshift.hpp"
#include "svbound/errors.hpp"

namespace svbound {

BoundContext build_context(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("matrix must be square");
  if (a.rows() < 2) throw DimensionError("matrix dimension must be at least 2");
  const LogMagnitude log_det = lu_logdet(a);
  if (log_det.is_zero()) throw SingularMatrixError();
  return BoundContext{a.rows(), frobenius_sq(a), log_det.pow(2.0), gram(a)};
}

}  // namespace svbound
