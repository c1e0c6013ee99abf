#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "svbound/classical_bounds.hpp"
#include "svbound/context.hpp"

namespace svbound {

enum class Direction { lower, upper };
enum class IterationStatus { converged, max_iter, stalled_zero_correction };

std::string_view direction_name(Direction d);
std::string_view status_name(IterationStatus s);

struct IterationConfig {
  SeedChoice seed;
  double tol_abs = 0.0;
  double tol_rel = 1e-14;
  std::size_t max_iter = 100000;

  // Throws DomainError unless tolerances are nonnegative with a positive sum
  // and max_iter > 0.
  void validate() const;
};

// lin-xie seed for the lower run, frobenius for the upper run.
IterationConfig default_config(Direction d);

// One row per evaluated step: lambda = a^2 at step k and the (nonnegative)
// amount by which the step moved it.
struct TraceEntry {
  std::size_t k;
  double lambda;
  double a;
  double correction;
};

struct ConvergenceTrace {
  Direction direction;
  std::vector<TraceEntry> iterates;
  IterationStatus status;
  // lambda after the last step, and its square root.
  double final_lambda;
  double final_bound;

  std::size_t iterations() const noexcept { return iterates.size(); }
};

// lambda + |det(lambda I - G)| ((n-1)/(S - (n-1) lambda))^(n-1), never below
// lambda. Valid as a lower bound on sigma_min^2 whenever lambda <= sigma_min^2.
// Throws DomainError when S - (n-1) lambda <= 0.
double lower_step(const BoundContext& ctx, double lambda);

// lambda - |det(lambda I - G)| ((n-1)/((n+1) lambda - S))^(n-1), clamped to
// [0, lambda]. Valid as an upper bound on sigma_max^2 whenever
// lambda >= sigma_max^2. Throws DomainError when (n+1) lambda - S <= 0.
double upper_step(const BoundContext& ctx, double lambda);

// Starting lambda for the given direction. Lower runs accept yu-gu, zou,
// lin-xie and custom seeds; upper runs accept frobenius and custom.
double seed_lambda(const BoundContext& ctx, const SeedChoice& seed, Direction d);

// Iterates from seed_lambda until a step moves lambda by at most
// tol_abs + tol_rel * lambda (converged), a step is exactly zero because
// lambda hit an eigenvalue of G (stalled_zero_correction), or max_iter steps
// have been taken. Every iterate is a valid one-sided bound provided the seed
// is; custom seeds are not checked.
ConvergenceTrace run_lower(const BoundContext& ctx, const IterationConfig& config);
ConvergenceTrace run_upper(const BoundContext& ctx, const IterationConfig& config);

// Ratios correction[k+1] / correction[k] for consecutive nonzero corrections.
std::vector<double> contraction_factors(const ConvergenceTrace& trace);

}  // namespace svbound
