#include "anharm/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anharm/detail/hyperbolic.hpp"
#include "anharm/errors.hpp"

namespace anharm {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

}  // namespace

void ModelParams::validate() const {
  require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
  require(std::isfinite(omega) && omega >= 0.0, "omega must be non-negative (double-well not supported)");
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  require(std::isfinite(beta) && beta > 0.0, "beta must be positive");
}

void RescaledParams::validate() const {
  require(std::isfinite(z) && z >= 0.0, "z must be non-negative");
  require(std::isfinite(t_reduced) && t_reduced > 0.0, "reduced temperature must be positive");
}

RescaledParams rescale(const ModelParams& params) {
  params.validate();
  if (params.mass != 1.0) {
    throw ValidationError("rescaling is defined for mass = 1 only, got mass = " + std::to_string(params.mass));
  }
  const double cbrt_lambda = std::cbrt(params.lambda);
  return RescaledParams{
      .z = 0.5 * params.omega * params.omega / (cbrt_lambda * cbrt_lambda),
      .t_reduced = params.temperature() / cbrt_lambda,
  };
}

ModelParams unrescale(const RescaledParams& rescaled, double lambda) {
  rescaled.validate();
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  const double cbrt_lambda = std::cbrt(lambda);
  return ModelParams{
      .mass = 1.0,
      .omega = std::sqrt(2.0 * rescaled.z) * cbrt_lambda,
      .lambda = lambda,
      .beta = 1.0 / (rescaled.t_reduced * cbrt_lambda),
  };
}

Propagator::Propagator(double omega_big, double mass, double beta)
    : omega_big_(omega_big), mass_(mass), beta_(beta) {
  require(std::isfinite(omega_big) && omega_big > 0.0, "propagator frequency must be positive");
  require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
  require(std::isfinite(beta) && beta > 0.0, "beta must be positive");
  const double x = beta * omega_big;
  scale_ = 1.0 / (2.0 * mass * omega_big * detail::one_minus_q(x));
}

double Propagator::eval(double tau, double tau_prime) const {
  require(tau >= 0.0 && tau <= beta_ && tau_prime >= 0.0 && tau_prime <= beta_,
          "propagator times must lie in [0, beta]");
  return at_separation(std::abs(tau - tau_prime));
}

double Propagator::log_at_separation(double s) const {
  const double near = std::min(s, beta_ - s);
  return std::log(scale_) - omega_big_ * near + std::log1p(std::exp(-omega_big_ * std::abs(beta_ - 2.0 * s)));
}

double Propagator::coincident() const {
  return detail::coth_half(beta_ * omega_big_) / (2.0 * mass_ * omega_big_);
}

double Propagator::matsubara(double s, long n_max) const {
  require(n_max >= 1, "Matsubara cutoff must be >= 1");
  const double w2 = omega_big_ * omega_big_;
  const double step = 2.0 * std::numbers::pi / beta_;
  // smallest terms first
  double sum = 0.0;
  for (long n = n_max; n >= 1; --n) {
    const double wn = step * static_cast<double>(n);
    sum += 2.0 * std::cos(wn * s) / (wn * wn + w2);
  }
  sum += 1.0 / w2;
  return sum / (mass_ * beta_);
}

double harmonic_free_energy(double mass, double nu, double beta) {
  require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
  require(std::isfinite(nu) && nu > 0.0, "frequency must be positive");
  require(std::isfinite(beta) && beta > 0.0, "beta must be positive");
  return detail::log_two_sinh_half(beta * nu) / beta;
}

}  // namespace anharm
