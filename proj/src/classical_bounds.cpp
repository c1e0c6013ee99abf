#include "svbound/classical_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "svbound/errors.hpp"

namespace svbound {

SeedChoice::SeedChoice(SeedKind kind) : kind_(kind), custom_value_() {
  if (kind == SeedKind::custom) throw DomainError("custom seed requires a value");
}

SeedChoice SeedChoice::custom(double value) {
  if (!std::isfinite(value) || value <= 0.0) throw DomainError("custom seed must be positive and finite");
  return SeedChoice(SeedKind::custom, value);
}

std::optional<SeedKind> parse_seed_kind(std::string_view name) {
  if (name == "yu-gu") return SeedKind::yu_gu;
  if (name == "zou") return SeedKind::zou;
  if (name == "lin-xie") return SeedKind::lin_xie;
  if (name == "frobenius") return SeedKind::frobenius;
  if (name == "custom") return SeedKind::custom;
  return std::nullopt;
}

std::string_view seed_kind_name(SeedKind kind) {
  switch (kind) {
    case SeedKind::yu_gu: return "yu-gu";
    case SeedKind::zou: return "zou";
    case SeedKind::lin_xie: return "lin-xie";
    case SeedKind::frobenius: return "frobenius";
    case SeedKind::custom: return "custom";
  }
  return "unknown";
}

namespace {

double log_det_abs(const BoundContext& ctx) { return 0.5 * ctx.log_det_sq.log_mag(); }

}  // namespace

double yu_gu_lower(const BoundContext& ctx) {
  const double m = static_cast<double>(ctx.n - 1);
  return std::exp(log_det_abs(ctx) + 0.5 * m * (std::log(m) - std::log(ctx.frob_sq)));
}

double zou_lower(const BoundContext& ctx) {
  const double m = static_cast<double>(ctx.n - 1);
  const double l = yu_gu_lower(ctx);
  return std::exp(log_det_abs(ctx) + 0.5 * m * (std::log(m) - std::log(ctx.frob_sq - l * l)));
}

double lin_xie_root(const BoundContext& ctx, double tol) {
  if (!(tol > 0.0)) throw DomainError("lin_xie_root: tolerance must be positive");
  const double n = static_cast<double>(ctx.n);
  const double m = n - 1.0;
  const double s = ctx.frob_sq;
  const double top = std::sqrt(s / n);

  // log g(x) - log RHS written in t = 1 - n x^2 / S:
  //   h(t) = gap + log(1 - t) + (n-1) log(1 + t/(n-1)),
  // with gap = n log(S/n) - log|det A|^2 >= 0. h decreases in t.
  const double log_mean = std::log(s / n);
  const double log_det_sq = ctx.log_det_sq.log_mag();
  double gap = n * log_mean - log_det_sq;
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() *
                          (std::abs(n * log_mean) + std::abs(log_det_sq) + 1.0);
  if (gap < 0.0) {
    if (gap < -rounding) {
      throw DomainError("lin_xie_root: |det A|^2 exceeds (S/n)^n; inconsistent context");
    }
    gap = 0.0;
  }
  const auto below_rhs = [&](double x) {
    const double t = 1.0 - n * (x * x) / s;
    return gap + std::log1p(-t) + m * std::log1p(t / m) < 0.0;
  };

  if (gap == 0.0) return top;
  double lo = 0.0, hi = top;
  for (int it = 0; it < 200 && hi - lo > tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (below_rhs(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double upper_seed(const BoundContext& ctx) { return std::sqrt(ctx.frob_sq); }

}  // namespace svbound
