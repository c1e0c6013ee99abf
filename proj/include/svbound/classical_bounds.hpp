#pragma once

#include <optional>
#include <string_view>

#include "svbound/context.hpp"

namespace svbound {

enum class SeedKind { yu_gu, zou, lin_xie, frobenius, custom };

// Starting value for an iteration: one of the closed-form bounds below, or a
// caller-supplied positive value.
class SeedChoice {
 public:
  // kind must not be custom.
  explicit SeedChoice(SeedKind kind);
  static SeedChoice custom(double value);

  SeedKind kind() const noexcept { return kind_; }
  std::optional<double> custom_value() const noexcept { return custom_value_; }

 private:
  SeedChoice(SeedKind kind, std::optional<double> value) : kind_(kind), custom_value_(value) {}

  SeedKind kind_;
  std::optional<double> custom_value_;
};

std::optional<SeedKind> parse_seed_kind(std::string_view name);
std::string_view seed_kind_name(SeedKind kind);

inline constexpr double kDefaultRootTol = 1e-12;

// |det A| ((n-1)/S)^((n-1)/2).
double yu_gu_lower(const BoundContext& ctx);

// |det A| ((n-1)/(S - l^2))^((n-1)/2) with l = yu_gu_lower(ctx).
double zou_lower(const BoundContext& ctx);

// Smallest positive root a of x^2 (S - x^2)^(n-1) = |det A|^2 (n-1)^(n-1).
//
// g(x) = x^2 (S - x^2)^(n-1) increases strictly on [0, sqrt(S/n)] and
// g(sqrt(S/n)) >= |det A|^2 (n-1)^(n-1) by AM-GM, so the root is bracketed
// there. Bisection runs until the bracket is narrower than tol times its upper end
// (at most 200 halvings) and returns the lower end, which never exceeds the
// root. Comparisons are made in log space on t = 1 - n x^2 / S so that the
// AM-GM gap n log(S/n) - log|det A|^2 is isolated; a gap that is negative
// by more than rounding throws DomainError.
double lin_xie_root(const BoundContext& ctx, double tol = kDefaultRootTol);

// sqrt(S) = ||A||_F, which exceeds the largest singular value.
double upper_seed(const BoundContext& ctx);

}  // namespace svbound
