#include "svbound/iterate.hpp"

#include <algorithm>
#include <cmath>

#include "svbound/detshift.hpp"
#include "svbound/errors.hpp"

namespace svbound {

std::string_view direction_name(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

std::string_view status_name(IterationStatus s) {
  switch (s) {
    case IterationStatus::converged: return "converged";
    case IterationStatus::max_iter: return "max-iter";
    case IterationStatus::stalled_zero_correction: return "stalled-zero-correction";
  }
  return "unknown";
}

void IterationConfig::validate() const {
  if (!(tol_abs >= 0.0) || !(tol_rel >= 0.0) || !(tol_abs + tol_rel > 0.0)) {
    throw DomainError("tolerances must be nonnegative with a positive sum");
  }
  if (max_iter == 0) throw DomainError("max_iter must be positive");
}

IterationConfig default_config(Direction d) {
  return IterationConfig{SeedChoice(d == Direction::lower ? SeedKind::lin_xie : SeedKind::frobenius)};
}

namespace {

// Magnitude of the step away from lambda, before clamping.
double correction_term(const BoundContext& ctx, double lambda, Direction d) {
  const double m = static_cast<double>(ctx.n - 1);
  const double denom = d == Direction::lower ? ctx.frob_sq - m * lambda
                                             : (m + 2.0) * lambda - ctx.frob_sq;
  if (!(denom > 0.0)) {
    throw DomainError(d == Direction::lower
                          ? "lower step: S - (n-1) lambda is not positive; seed exceeds sigma_min"
                          : "upper step: (n+1) lambda - S is not positive; seed is below sigma_max");
  }
  const LogMagnitude det = shifted_gram_logdet(ctx, lambda);
  if (det.is_zero()) return 0.0;
  return std::exp(det.log_mag() + m * (std::log(m) - std::log(denom)));
}

double apply_step(double lambda, double correction, Direction d) {
  if (d == Direction::lower) return std::max(lambda + correction, lambda);
  return std::clamp(lambda - correction, 0.0, lambda);
}

ConvergenceTrace run(const BoundContext& ctx, const IterationConfig& config, Direction d) {
  config.validate();
  ConvergenceTrace trace{d, {}, IterationStatus::max_iter, 0.0, 0.0};
  double lambda = seed_lambda(ctx, config.seed, d);
  for (std::size_t k = 1; k <= config.max_iter; ++k) {
    const double raw = correction_term(ctx, lambda, d);
    const double next = apply_step(lambda, raw, d);
    const double moved = std::abs(next - lambda);
    trace.iterates.push_back({k, lambda, std::sqrt(lambda), moved});
    const double threshold = config.tol_abs + config.tol_rel * lambda;
    lambda = next;
    if (raw == 0.0) {
      trace.status = IterationStatus::stalled_zero_correction;
      break;
    }
    if (moved <= threshold) {
      trace.status = IterationStatus::converged;
      break;
    }
  }
  trace.final_lambda = lambda;
  trace.final_bound = std::sqrt(lambda);
  return trace;
}

}  // namespace

double lower_step(const BoundContext& ctx, double lambda) {
  return apply_step(lambda, correction_term(ctx, lambda, Direction::lower), Direction::lower);
}

double upper_step(const BoundContext& ctx, double lambda) {
  return apply_step(lambda, correction_term(ctx, lambda, Direction::upper), Direction::upper);
}

double seed_lambda(const BoundContext& ctx, const SeedChoice& seed, Direction d) {
  const auto squared = [](double x) { return x * x; };
  if (seed.kind() == SeedKind::custom) return squared(*seed.custom_value());
  if (d == Direction::lower) {
    switch (seed.kind()) {
      case SeedKind::yu_gu: return squared(yu_gu_lower(ctx));
      case SeedKind::zou: return squared(zou_lower(ctx));
      case SeedKind::lin_xie: return squared(lin_xie_root(ctx));
      default: break;
    }
  } else if (seed.kind() == SeedKind::frobenius) {
    return ctx.frob_sq;
  }
  throw DomainError("seed '" + std::string(seed_kind_name(seed.kind())) + "' is not valid for the " +
                    std::string(direction_name(d)) + " iteration");
}

ConvergenceTrace run_lower(const BoundContext& ctx, const IterationConfig& config) {
  return run(ctx, config, Direction::lower);
}

ConvergenceTrace run_upper(const BoundContext& ctx, const IterationConfig& config) {
  return run(ctx, config, Direction::upper);
}

std::vector<double> contraction_factors(const ConvergenceTrace& trace) {
  std::vector<double> out;
  for (std::size_t k = 1; k < trace.iterates.size(); ++k) {
    const double prev = trace.iterates[k - 1].correction;
    const double cur = trace.iterates[k].correction;
    if (prev > 0.0 && cur > 0.0) out.push_back(cur / prev);
  }
  return out;
}

}  // namespace svbound
