#include "anharm/variational.hpp"

#include <cmath>
#include <limits>

#include "anharm/detail/hyperbolic.hpp"
#include "anharm/errors.hpp"

namespace anharm {

namespace {

constexpr int kMaxFixedPointIterations = 2000;
constexpr int kMaxBisectionIterations = 400;

void require_positive_frequency(double omega_big) {
  if (!(std::isfinite(omega_big) && omega_big > 0.0)) {
    throw ValidationError("trial frequency must be positive");
  }
}

double coincident(const ModelParams& p, double w) {
  return detail::coth_half(p.beta * w) / (2.0 * p.mass * w);
}

// g(W) of the fixed-point form W = g(W).
double gap_map(const ModelParams& p, double w) {
  const double coth = detail::coth_half(p.beta * w);
  return std::sqrt(p.omega * p.omega + 6.0 * p.lambda * coth / (p.mass * p.mass * w));
}

// Signed residual; strictly increasing in W.
double signed_residual(const ModelParams& p, double w) {
  const double coth = detail::coth_half(p.beta * w);
  return (w * w - p.omega * p.omega - 6.0 * p.lambda * coth / (p.mass * p.mass * w)) / (w * w);
}

int second_variation_sign(const ModelParams& p, double w) {
  const double u = w * w;
  const double h = 1e-5 * u;
  const double f_minus = fbar(p, std::sqrt(u - h));
  const double f_mid = fbar(p, w);
  const double f_plus = fbar(p, std::sqrt(u + h));
  const double d2 = (f_plus - 2.0 * f_mid + f_minus) / (h * h);
  // differences below round-off carry no sign information
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                       (std::abs(f_plus) + 2.0 * std::abs(f_mid) + std::abs(f_minus)) / (h * h);
  if (std::abs(d2) <= noise) return 0;
  return d2 > 0.0 ? 1 : -1;
}

struct RootResult {
  double omega_big;
  int iterations;
};

RootResult fixed_point(const ModelParams& p, double tol) {
  double w = std::max(p.omega, std::cbrt(6.0 * p.lambda / (p.mass * p.mass)));
  for (int it = 1; it <= kMaxFixedPointIterations; ++it) {
    const double next = 0.5 * (w + gap_map(p, w));
    const double step = std::abs(next - w);
    w = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * w && std::abs(signed_residual(p, w)) < tol) {
      return {w, it};
    }
  }
  return {w, kMaxFixedPointIterations};
}

RootResult bisection(const ModelParams& p) {
  const double scale = std::cbrt(6.0 * p.lambda / (p.mass * p.mass));
  double lo = p.omega > 0.0 ? p.omega : scale;
  while (signed_residual(p, lo) >= 0.0) lo *= 0.5;
  double hi = p.omega + scale;
  while (signed_residual(p, hi) <= 0.0) hi *= 2.0;
  int it = 0;
  while (it < kMaxBisectionIterations) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (signed_residual(p, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double w = std::abs(signed_residual(p, lo)) < std::abs(signed_residual(p, hi)) ? lo : hi;
  return {w, it};
}

}  // namespace

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::NonzeroRoot: return "nonzero-root";
    case Branch::Zero: return "zero";
    case Branch::Infinite: return "infinite";
  }
  return "unknown";
}

double fbar(const ModelParams& params, double omega_big) {
  require_positive_frequency(omega_big);
  const double g = coincident(params, omega_big);
  return detail::log_two_sinh_half(params.beta * omega_big) / params.beta +
         0.5 * params.mass * (params.omega * params.omega - omega_big * omega_big) * g +
         3.0 * params.lambda * g * g;
}

double dfbar_domega2(const ModelParams& params, double omega_big) {
  require_positive_frequency(omega_big);
  const double w = omega_big;
  const double x = params.beta * w;
  const double g = coincident(params, w);
  // dG/dW; the harmonic term's derivative cancels against -m W G.
  const double dg = -(detail::coth_half(x) / w + 0.5 * params.beta * detail::csch2_half(x)) / (2.0 * params.mass * w);
  const double bracket = 0.5 * params.mass * (params.omega * params.omega - w * w) + 6.0 * params.lambda * g;
  return dg * bracket / (2.0 * w);
}

double gap_residual(const ModelParams& params, double omega_big) {
  require_positive_frequency(omega_big);
  return std::abs(signed_residual(params, omega_big));
}

double variational_free_energy(const ModelParams& params, double omega_big) {
  require_positive_frequency(omega_big);
  const double x = params.beta * omega_big;
  const double coth = detail::coth_half(x);
  return detail::log_two_sinh_half(x) / params.beta -
         3.0 * params.lambda * coth * coth / (4.0 * params.mass * params.mass * omega_big * omega_big);
}

BoundaryLimits fbar_boundary_limits(const ModelParams& params) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  // W -> 0: the 3 lambda G^2 ~ 3 lambda / (m beta W^2)^2 term dominates; for
  // lambda = 0 the w^2/(2 beta W^2) term, and for w = 0 too, ln(beta W)/beta.
  double at_zero = -inf;
  if (params.lambda > 0.0 || params.omega > 0.0) at_zero = inf;
  // W -> infinity: Fbar ~ W/4.
  return {at_zero, inf};
}

Branch select_branch(double f_root, double f_zero, double f_infinity) {
  if (f_root <= f_zero && f_root <= f_infinity) return Branch::NonzeroRoot;
  return f_zero <= f_infinity ? Branch::Zero : Branch::Infinite;
}

VariationalSolution solve_gap(const ModelParams& params, double tol, GapMethod method) {
  params.validate();
  if (!(tol > 0.0)) throw ValidationError("gap tolerance must be positive");

  RootResult root{};
  GapMethod used = method;
  if (method == GapMethod::FixedPoint) {
    root = fixed_point(params, tol);
    if (!(std::abs(signed_residual(params, root.omega_big)) < tol)) {
      root = bisection(params);
      used = GapMethod::Bisection;
    }
  } else {
    root = bisection(params);
  }

  VariationalSolution sol;
  sol.omega_big = root.omega_big;
  sol.iterations = root.iterations;
  sol.method = used;
  sol.residual = std::abs(signed_residual(params, root.omega_big));
  if (!(sol.residual < tol)) {
    throw ConvergenceError("gap equation did not reach tolerance", root.omega_big, sol.residual);
  }
  sol.f0 = variational_free_energy(params, sol.omega_big);
  sol.second_variation_sign = second_variation_sign(params, sol.omega_big);

  const BoundaryLimits limits = fbar_boundary_limits(params);
  sol.branch = select_branch(fbar(params, sol.omega_big), limits.at_zero, limits.at_infinity);
  if (sol.branch != Branch::NonzeroRoot) {
    // ruled out by lambda > 0; a boundary minimum has no stationary F0
    throw ConvergenceError("trial free energy is minimized on a boundary branch", sol.f0, 0.0);
  }
  return sol;
}

double f0(const ModelParams& params) { return solve_gap(params).f0; }

}  // namespace anharm
