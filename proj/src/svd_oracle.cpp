#include "svbound/svd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "svbound/errors.hpp"

namespace svbound {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("spectrum must be nonempty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw DomainError("singular values must be finite and nonnegative");
    }
    if (i > 0 && values_[i] > values_[i - 1]) throw DomainError("singular values must be descending");
  }
}

namespace {

struct Masses {
  double off;
  double diag;
};

Masses masses(const std::vector<Complex>& g, std::size_t n) {
  double off = 0.0, diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        diag += std::norm(g[i * n + j]);
      } else {
        off += std::norm(g[i * n + j]);
      }
    }
  }
  return {std::sqrt(off), std::sqrt(diag)};
}

// Annihilates g(p,q) with J = Phase * R, where Phase = diag(.., 1, e^{-i phi}, ..)
// makes the (p,q) entry real and R is the classical real Jacobi rotation.
void rotate(std::vector<Complex>& g, std::size_t n, std::size_t p, std::size_t q) {
  const Complex gpq = g[p * n + q];
  const double mag = std::abs(gpq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(gpq) / mag;  // e^{-i phi}
  const double app = g[p * n + p].real();
  const double aqq = g[q * n + q].real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex gkp = g[k * n + p], gkq = g[k * n + q];
    g[k * n + p] = gkp * jpp + gkq * jqp;
    g[k * n + q] = gkp * jpq + gkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex gpk = g[p * n + k], gqk = g[q * n + k];
    g[p * n + k] = std::conj(jpp) * gpk + std::conj(jqp) * gqk;
    g[q * n + k] = std::conj(jpq) * gpk + std::conj(jqq) * gqk;
  }
  g[p * n + q] = 0.0;
  g[q * n + p] = 0.0;
  g[p * n + p] = app - t * mag;
  g[q * n + q] = aqq + t * mag;
}

}  // namespace

std::vector<double> jacobi_hermitian_eigen(const ComplexMatrix& g, double sweep_tol) {
  if (!g.is_square()) throw DimensionError("jacobi: matrix must be square");
  const std::size_t n = g.rows();
  if (n > kOracleMaxDim) throw DimensionError("oracle limited to n <= 64");
  if (hermitian_defect(g) > 1e-10) throw DomainError("jacobi: matrix is not Hermitian");

  std::vector<Complex> work(g.entries().begin(), g.entries().end());
  for (std::size_t i = 0; i < n; ++i) work[i * n + i] = work[i * n + i].real();

  constexpr int kMaxSweeps = 30;
  for (int sweep = 0;; ++sweep) {
    const Masses m = masses(work, n);
    if (m.off <= sweep_tol * m.diag) break;
    if (sweep == kMaxSweeps) throw ConvergenceError("jacobi: no convergence within 30 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, n, p, q);
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = work[i * n + i].real();
  return eig;
}

Spectrum singular_values(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("singular_values: matrix must be square");
  if (a.rows() > kOracleMaxDim) throw DimensionError("oracle limited to n <= 64");
  const double s = frobenius_sq(a);
  std::vector<double> eig = jacobi_hermitian_eigen(gram(a));
  std::vector<double> sigma;
  sigma.reserve(eig.size());
  for (double e : eig) {
    if (e < -1e-10 * s) throw DomainError("Gram matrix has a negative eigenvalue");
    sigma.push_back(std::sqrt(std::max(e, 0.0)));
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return Spectrum(std::move(sigma));
}

bool prop1_exactness(const Spectrum& spectrum, double a, double tol) {
  return std::abs(a - spectrum.sigma_min()) <= tol;
}

bool leading_values_equal(const Spectrum& spectrum, double tol) {
  if (spectrum.size() <= 2) return true;
  const auto lead = spectrum.values().first(spectrum.size() - 1);
  const auto [lo, hi] = std::minmax_element(lead.begin(), lead.end());
  return *hi - *lo <= tol * spectrum.sigma_max();
}

}  // namespace svbound
