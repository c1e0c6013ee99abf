#pragma once

#include <cmath>
#include <limits>

namespace svbound {

// A nonnegative magnitude carried as its natural log, with an explicit flag
// for exact zero. Determinants of moderately sized matrices leave the double
// range long before their logs do.
class LogMagnitude {
 public:
  static LogMagnitude zero() noexcept { return LogMagnitude(true, 0.0); }
  static LogMagnitude from_log(double log_mag) noexcept { return LogMagnitude(false, log_mag); }
  // Requires value >= 0.
  static LogMagnitude from_value(double value) noexcept {
    return value == 0.0 ? zero() : from_log(std::log(value));
  }

  bool is_zero() const noexcept { return is_zero_; }
  // Meaningless when is_zero(); returns -inf in that case.
  double log_mag() const noexcept {
    return is_zero_ ? -std::numeric_limits<double>::infinity() : log_mag_;
  }
  double value() const noexcept { return is_zero_ ? 0.0 : std::exp(log_mag_); }

  // Requires exponent > 0.
  LogMagnitude pow(double exponent) const noexcept {
    return is_zero_ ? zero() : from_log(exponent * log_mag_);
  }

  friend LogMagnitude operator*(LogMagnitude lhs, LogMagnitude rhs) noexcept {
    if (lhs.is_zero_ || rhs.is_zero_) return zero();
    return from_log(lhs.log_mag_ + rhs.log_mag_);
  }
  friend LogMagnitude operator/(LogMagnitude lhs, LogMagnitude rhs) noexcept {
    if (lhs.is_zero_) return zero();
    return from_log(lhs.log_mag_ - rhs.log_mag_);
  }

 private:
  LogMagnitude(bool is_zero, double log_mag) noexcept : is_zero_(is_zero), log_mag_(log_mag) {}

  bool is_zero_;
  double log_mag_;
};

}  // namespace svbound
