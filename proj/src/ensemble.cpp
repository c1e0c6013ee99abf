#include "svbound/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "svbound/classical_bounds.hpp"
#include "svbound/errors.hpp"

namespace svbound {

ComplexMatrix random_unitary(std::size_t n, std::uint64_t rng_seed) {
  if (n == 0) throw DimensionError("random_unitary: n must be positive");
  Xoshiro256 rng(rng_seed);
  // Column-major working storage: column j occupies [j*n, (j+1)*n).
  std::vector<Complex> q(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[j * n + i] = rng.complex_gaussian();
  }
  // Classical Gram-Schmidt with one reorthogonalization pass; R's diagonal
  // comes out real and positive.
  for (std::size_t j = 0; j < n; ++j) {
    Complex* v = &q[j * n];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Complex* u = &q[k * n];
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm_sq += std::norm(v[i]);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < n; ++i) v[i] *= inv;
  }
  std::vector<Complex> rowmajor(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rowmajor[i * n + j] = q[j * n + i];
  }
  return ComplexMatrix(n, n, std::move(rowmajor));
}

SpectrumSample synth_matrix(std::span<const double> sigma, std::uint64_t rng_seed) {
  if (sigma.empty()) throw DomainError("synth_matrix: empty spectrum");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] > 0.0) || !std::isfinite(sigma[i])) {
      throw DomainError("synth_matrix: singular values must be positive");
    }
    if (i > 0 && sigma[i] > sigma[i - 1]) throw DomainError("synth_matrix: singular values must be descending");
  }
  const std::size_t n = sigma.size();
  std::uint64_t mix = rng_seed;
  const ComplexMatrix u = random_unitary(n, Xoshiro256::splitmix64(mix));
  const ComplexMatrix v = random_unitary(n, Xoshiro256::splitmix64(mix));

  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += u(i, k) * sigma[k] * std::conj(v(j, k));
      a[i * n + j] = acc;
    }
  }
  return SpectrumSample{ComplexMatrix(n, n, std::move(a)),
                        Spectrum(std::vector<double>(sigma.begin(), sigma.end())), rng_seed};
}

std::vector<double> random_spectrum(std::size_t n, double spread, Xoshiro256& rng) {
  std::vector<double> sigma;
  sigma.reserve(n);
  sigma.push_back(spread);
  for (std::size_t i = 2; i < n; ++i) sigma.push_back(1.0 + (spread - 1.0) * rng.uniform());
  if (n >= 2) sigma.push_back(1.0);
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

void SweepSpec::validate() const {
  if (fixed_sigma) {
    if (fixed_sigma->size() < 2) throw DomainError("sweep: fixed spectrum needs at least 2 values");
    if (fixed_sigma->size() > kOracleMaxDim) throw DomainError("sweep: fixed spectrum exceeds 64 values");
    const auto& s = *fixed_sigma;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!(s[i] > 0.0) || !std::isfinite(s[i]) || (i > 0 && s[i] > s[i - 1])) {
        throw DomainError("sweep: fixed spectrum must be positive and descending");
      }
    }
  } else {
    if (n_min < 2 || n_max < n_min) throw DomainError("sweep: n range must satisfy 2 <= n_min <= n_max");
    if (n_max > kOracleMaxDim) throw DomainError("sweep: n_max exceeds 64");
    if (!(spread_min >= 1.0) || !(spread_max >= spread_min) || !std::isfinite(spread_max)) {
      throw DomainError("sweep: spread range must satisfy 1 <= spread_min <= spread_max");
    }
  }
  lower.validate();
  upper.validate();
}

SpectrumSample sweep_sample(const SweepSpec& spec, std::size_t index) {
  const std::uint64_t seed = spec.base_seed + index;
  Xoshiro256 rng(seed);
  std::vector<double> sigma;
  if (spec.fixed_sigma) {
    sigma = *spec.fixed_sigma;
  } else {
    const std::size_t n = rng.uniform_int(spec.n_min, spec.n_max);
    const double spread = spec.spread_min + (spec.spread_max - spec.spread_min) * rng.uniform();
    sigma = random_spectrum(n, spread, rng);
  }
  SpectrumSample sample = synth_matrix(sigma, rng());
  sample.seed = seed;
  return sample;
}

BenchRow evaluate_sample(const SpectrumSample& sample, const IterationConfig& lower,
                         const IterationConfig& upper) {
  BenchRow row;
  row.seed = sample.seed;
  row.n = sample.sigma.size();
  row.sigma_min = sample.sigma.sigma_min();
  row.sigma_max = sample.sigma.sigma_max();
  row.cond = row.sigma_max / row.sigma_min;
  try {
    const BoundContext ctx = build_context(sample.matrix);
    row.l = yu_gu_lower(ctx);
    row.l0 = zou_lower(ctx);
    row.a = lin_xie_root(ctx);
    const ConvergenceTrace lo = run_lower(ctx, lower);
    row.lower_bound = lo.final_bound;
    row.lower_iters = lo.iterations();
    row.lower_status = lo.status;
    const ConvergenceTrace up = run_upper(ctx, upper);
    row.upper_bound = up.final_bound;
    row.upper_iters = up.iterations();
    row.upper_status = up.status;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<BenchRow> bench_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<BenchRow> rows(spec.samples);
  if (spec.samples == 0) return rows;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.samples));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < spec.samples; i = next++) {
      rows[i] = evaluate_sample(sweep_sample(spec, i), spec.lower, spec.upper);
    }
  };
  if (threads == 1) {
    worker();
    return rows;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return rows;
}

}  // namespace svbound
