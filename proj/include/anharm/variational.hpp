#pragma once

// Variational (Gaussian) free energy and the self-consistent gap equation
//   W^2 = w^2 + (6 lambda / (m^2 W)) coth(beta W / 2).

#include "anharm/model.hpp"

namespace anharm {

inline constexpr double kDefaultGapTolerance = 1e-12;

/// Which candidate minimizes the trial free energy: the nonzero stationary
/// point, or one of the boundary values W -> 0 and W -> infinity.
enum class Branch { NonzeroRoot, Zero, Infinite };

enum class GapMethod { FixedPoint, Bisection };

const char* to_string(Branch branch);

struct VariationalSolution {
  double omega_big = 0.0;
  double f0 = 0.0;
  Branch branch = Branch::NonzeroRoot;
  /// |W^2 - w^2 - 6 lambda coth(beta W/2) / (m^2 W)| / W^2 at omega_big.
  double residual = 0.0;
  /// Sign of d^2 Fbar / d(W^2)^2 at omega_big: +1, 0 or -1.
  int second_variation_sign = 0;
  GapMethod method = GapMethod::FixedPoint;
  int iterations = 0;
};

/// Trial free energy at an arbitrary frequency W > 0:
///   Fbar(W) = (1/beta) ln(2 sinh(beta W/2)) + m (w^2 - W^2) G/2 + 3 lambda G^2,
/// with G = coth(beta W/2) / (2 m W) the coincident propagator.
double fbar(const ModelParams& params, double omega_big);

/// Analytic d Fbar / d(W^2). Zero exactly where the gap equation holds.
double dfbar_domega2(const ModelParams& params, double omega_big);

/// Relative gap-equation residual (see VariationalSolution::residual).
double gap_residual(const ModelParams& params, double omega_big);

/// Fbar with the gap relation substituted:
///   (1/beta) ln(2 sinh(beta W/2)) - 3 lambda coth^2(beta W/2) / (4 m^2 W^2).
/// Equals fbar() only at a root of the gap equation.
double variational_free_energy(const ModelParams& params, double omega_big);

/// Limits of Fbar as W -> 0 and W -> infinity (may be +/- infinity).
struct BoundaryLimits {
  double at_zero;
  double at_infinity;
};
BoundaryLimits fbar_boundary_limits(const ModelParams& params);

/// Picks the branch with the smallest trial free energy. Ties go to the root.
Branch select_branch(double f_root, double f_zero, double f_infinity);

/// Solves the gap equation. Damped fixed-point iteration W <- (W + g(W))/2
/// falls back to bisection on the residual when it does not reach `tol`.
/// Throws ValidationError for tol <= 0 or invalid params and ConvergenceError
/// when neither strategy reaches `tol`.
VariationalSolution solve_gap(const ModelParams& params, double tol = kDefaultGapTolerance,
                              GapMethod method = GapMethod::FixedPoint);

/// Variational free energy F0 at the solution of the gap equation.
double f0(const ModelParams& params);

}  // namespace anharm
