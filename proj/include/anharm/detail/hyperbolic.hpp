#pragma once

// Overflow-safe hyperbolic ratios written in terms of q = exp(-x).
// All functions take x > 0.

#include <cmath>

namespace anharm::detail {

/// 1 - exp(-x), accurate for small x.
inline double one_minus_q(double x) { return -std::expm1(-x); }

/// coth(x/2) = (1 + q) / (1 - q).
inline double coth_half(double x) { return (1.0 + std::exp(-x)) / one_minus_q(x); }

/// csch^2(x/2) = 4q / (1 - q)^2.
inline double csch2_half(double x) {
  const double d = one_minus_q(x);
  return 4.0 * std::exp(-x) / (d * d);
}

/// ln(2 sinh(x/2)) = x/2 + ln(1 - q).
inline double log_two_sinh_half(double x) { return 0.5 * x + std::log(one_minus_q(x)); }

}  // namespace anharm::detail
