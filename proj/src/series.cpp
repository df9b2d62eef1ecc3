#include "anharm/series.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "anharm/detail/hyperbolic.hpp"
#include "anharm/detail/series_coefficients.hpp"
#include "anharm/errors.hpp"

namespace anharm {

namespace {

double q_form(std::span<const detail::QTerm> terms, int order, double x) {
  const double q = std::exp(-x);
  double num = 0.0;
  for (const auto& t : terms) {
    num += t.coefficient * std::pow(x, t.x_power) * std::pow(q, t.q_power);
  }
  return num / std::pow(detail::one_minus_q(x), 2 * order);
}

double taylor(std::span<const double> coeffs, int order, double x) {
  double s = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
  return s / std::pow(x, order + 1);
}

void require_frequency(double omega_big) {
  if (!(std::isfinite(omega_big) && omega_big > 0.0)) {
    throw ValidationError("frequency must be positive");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool is_valid_order(int order) { return order == 0 || order == 2 || order == 3 || order == 4; }

double correction_kernel(int order, double x) {
  if (!(std::isfinite(x) && x > 0.0)) throw ValidationError("beta * W must be positive");
  const bool small = x < kKernelSeriesSwitch;
  switch (order) {
    case 2: return small ? taylor(detail::kTaylor2, 2, x) : q_form(detail::kQForm2, 2, x);
    case 3: return small ? taylor(detail::kTaylor3, 3, x) : q_form(detail::kQForm3, 3, x);
    case 4: return small ? taylor(detail::kTaylor4, 4, x) : q_form(detail::kQForm4, 4, x);
    default: throw ValidationError("correction order must be 2, 3 or 4, got " + std::to_string(order));
  }
}

double correction_kernel_limit(int order) {
  std::span<const detail::QTerm> terms;
  switch (order) {
    case 2: terms = detail::kQForm2; break;
    case 3: terms = detail::kQForm3; break;
    case 4: terms = detail::kQForm4; break;
    default: throw ValidationError("correction order must be 2, 3 or 4, got " + std::to_string(order));
  }
  double limit = 0.0;
  for (const auto& t : terms) {
    if (t.q_power == 0 && t.x_power == 0) limit += t.coefficient;
  }
  return limit;
}

double correction_closed(int order, const ModelParams& params, double omega_big) {
  params.validate();
  require_frequency(omega_big);
  const double w = omega_big;
  const double sign = order % 2 == 0 ? -1.0 : 1.0;
  const double kernel = correction_kernel(order, params.beta * w);
  const double prefactor = std::pow(params.lambda, order) /
                           (factorial(order) * std::pow(w, order - 1) * std::pow(2.0 * params.mass * w, 2 * order));
  return sign * prefactor * kernel;
}

double c2_closed(const ModelParams& params, double omega_big) { return correction_closed(2, params, omega_big); }
double c3_closed(const ModelParams& params, double omega_big) { return correction_closed(3, params, omega_big); }
double c4_closed(const ModelParams& params, double omega_big) { return correction_closed(4, params, omega_big); }

double FreeEnergySeries::partial_sum(int order) const {
  if (!is_valid_order(order) || order > max_order) {
    throw std::out_of_range("partial sum of order " + std::to_string(order) + " not evaluated (max_order " +
                            std::to_string(max_order) + ")");
  }
  double sum = f0;
  if (order >= 2) sum += c2;
  if (order >= 3) sum += c3;
  if (order >= 4) sum += c4;
  return sum;
}

double FreeEnergySeries::f2() const { return partial_sum(2); }
double FreeEnergySeries::f3() const { return partial_sum(3); }
double FreeEnergySeries::f4() const { return partial_sum(4); }

FreeEnergySeries series_eval(const ModelParams& params, int max_order, double gap_tol) {
  if (!is_valid_order(max_order)) {
    throw ValidationError("max_order must be 0, 2, 3 or 4, got " + std::to_string(max_order));
  }
  FreeEnergySeries s;
  s.variational = solve_gap(params, gap_tol);
  s.omega_big = s.variational.omega_big;
  s.max_order = max_order;
  s.f0 = s.variational.f0;
  if (max_order >= 2) s.c2 = c2_closed(params, s.omega_big);
  if (max_order >= 3) s.c3 = c3_closed(params, s.omega_big);
  if (max_order >= 4) s.c4 = c4_closed(params, s.omega_big);
  return s;
}

}  // namespace anharm
