#pragma once

// Corrections F^(2), F^(3), F^(4) around the variational free energy and their
// partial sums. All corrections share the single W from the gap equation.
//
// Each correction has the form
//   F^(n) = s_n lambda^n / (n! W^(n-1) (2 m W)^(2n)) * K_n(beta W),
// with s_n = (-1)^(n+1) and K_n the dimensionless sum over connected diagrams
// of symmetry factor times the pinned-vertex integral of the propagator
// numerators, divided by sinh^(2n)(beta W / 2). K_n is evaluated from exact
// coefficient tables (see tools/derive_series_coefficients.py): a Taylor
// series below beta W = 0.5, the form in q = exp(-beta W) above.

#include "anharm/model.hpp"
#include "anharm/variational.hpp"

namespace anharm {

/// Below this beta*W the kernels use their Taylor expansion.
inline constexpr double kKernelSeriesSwitch = 0.5;

/// Dimensionless diagram kernel K_n(x) for n in {2, 3, 4}, x > 0.
double correction_kernel(int order, double x);

/// Zero-temperature limit of K_n (12, 648, 113904).
double correction_kernel_limit(int order);

/// -(3 lambda^2 / (64 m^4 W^5)) sinh^-4(beta W/2) [6 beta W + 8 sinh(beta W) + sinh(2 beta W)]
double c2_closed(const ModelParams& params, double omega_big);

/// (9 lambda^3 / (512 m^6 W^8)) sinh^-6(beta W/2) {-48 + 32 x^2 + (8 x^2 - 3) cosh x
///   + 48 cosh 2x + 3 cosh 3x + 108 x sinh x},  x = beta W
double c3_closed(const ModelParams& params, double omega_big);

/// -(3 lambda^4 / (32768 beta m^8 W^12)) sinh^-8(beta W/2) B(x), x = beta W, with
///   B = 25920 x^4 - 190392 x^2 + (16128 x^4 + 86496 x^2) cosh x
///     + (288 x^4 + 103032 x^2) cosh 2x + 864 x^2 cosh 3x
///     + (131328 x^3 - 196560 x) sinh x + (11232 x^3 + 40516 x) sinh 2x
///     + 36400 x sinh 3x + 1582 x sinh 4x.
/// The sum of the three fourth-order topologies (square, double-edged K4,
/// triple-edged ring); agrees with direct quadrature of the diagrams.
double c4_closed(const ModelParams& params, double omega_big);

/// Dispatches to c2_closed / c3_closed / c4_closed.
double correction_closed(int order, const ModelParams& params, double omega_big);

struct FreeEnergySeries {
  double omega_big = 0.0;
  int max_order = 0;
  double f0 = 0.0;
  double c2 = 0.0;  // zero unless max_order >= 2
  double c3 = 0.0;  // zero unless max_order >= 3
  double c4 = 0.0;  // zero unless max_order >= 4
  VariationalSolution variational;

  double f2() const;
  double f3() const;
  double f4() const;
  /// Partial sum through `order` (0, 2, 3 or 4; at most max_order).
  double partial_sum(int order) const;
};

/// Solves the gap equation once and evaluates the corrections through
/// max_order, which must be 0, 2, 3 or 4 (there is no first-order term).
FreeEnergySeries series_eval(const ModelParams& params, int max_order,
                             double gap_tol = kDefaultGapTolerance);

bool is_valid_order(int order);

}  // namespace anharm
