#pragma once

#include "svbound/context.hpp"
#include "svbound/log_magnitude.hpp"
#include "svbound/matrix.hpp"

namespace svbound {

// |det M| from LU with partial pivoting (largest modulus, lowest row index
// on ties). Zero exactly when some pivot is exactly 0.0.
LogMagnitude lu_logdet(const ComplexMatrix& m);

// |det(lambda I - A^H A)| for the Gram matrix held by ctx.
LogMagnitude shifted_gram_logdet(const BoundContext& ctx, double lambda);

}  // namespace svbound
