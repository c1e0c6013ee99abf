#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svbound/iterate.hpp"
#include "svbound/matrix.hpp"
#include "svbound/rng.hpp"
#include "svbound/svd_oracle.hpp"

namespace svbound {

// A matrix U diag(sigma) V^H whose singular values are known by construction.
struct SpectrumSample {
  ComplexMatrix matrix;
  Spectrum sigma;
  std::uint64_t seed;
};

// Q from the QR factorization of an n x n matrix of standard complex
// Gaussians, with R's diagonal made positive so Q is Haar distributed.
// Deterministic in (n, rng_seed).
ComplexMatrix random_unitary(std::size_t n, std::uint64_t rng_seed);

// sigma must be positive and descending; throws DomainError otherwise.
SpectrumSample synth_matrix(std::span<const double> sigma, std::uint64_t rng_seed);

// Random spectrum with sigma_min = 1, sigma_max = spread and the n - 2
// interior values uniform in between.
std::vector<double> random_spectrum(std::size_t n, double spread, Xoshiro256& rng);

// Sample i of a sweep uses seed base_seed + i. Each sample draws n uniformly
// from [n_min, n_max] and the spread sigma_max/sigma_min uniformly from
// [spread_min, spread_max], unless fixed_sigma pins the spectrum.
struct SweepSpec {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  double spread_min = 1.0;
  double spread_max = 10.0;
  std::size_t samples = 0;
  std::uint64_t base_seed = 1;
  std::optional<std::vector<double>> fixed_sigma;
  IterationConfig lower = default_config(Direction::lower);
  IterationConfig upper = default_config(Direction::upper);

  // Throws DomainError for empty or inverted ranges, n_min < 2, spread < 1.
  void validate() const;
};

SpectrumSample sweep_sample(const SweepSpec& spec, std::size_t index);

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double cond = 0.0;
  double l = 0.0;
  double l0 = 0.0;
  double a = 0.0;
  double lower_bound = 0.0;
  std::size_t lower_iters = 0;
  IterationStatus lower_status = IterationStatus::max_iter;
  double upper_bound = 0.0;
  std::size_t upper_iters = 0;
  IterationStatus upper_status = IterationStatus::max_iter;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  // Set when the sample could not be evaluated; numeric fields are then partial.
  std::optional<std::string> error;

  double lower_gap() const noexcept { return sigma_min - lower_bound; }
  double upper_gap() const noexcept { return upper_bound - sigma_max; }
};

BenchRow evaluate_sample(const SpectrumSample& sample, const IterationConfig& lower,
                         const IterationConfig& upper);

// Rows ordered by sample index regardless of thread count (0 = hardware
// concurrency).
std::vector<BenchRow> bench_sweep(const SweepSpec& spec, unsigned threads = 1);

}  // namespace svbound
