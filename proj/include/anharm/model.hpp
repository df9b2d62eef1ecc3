#pragma once

// Parameters of the quartic oscillator H = p^2/(2m) + m w^2 x^2 / 2 + lambda x^4,
// the dimensionless (z, reduced T) parametrization, and the thermal propagator.
// Units: hbar = k_B = 1.

#include <cmath>

namespace anharm {

struct ModelParams {
  double mass = 1.0;
  double omega = 1.0;   // harmonic frequency, >= 0
  double lambda = 1.0;  // quartic coupling, > 0
  double beta = 1.0;    // inverse temperature, > 0

  double temperature() const { return 1.0 / beta; }

  /// Throws ValidationError unless m > 0, omega >= 0, lambda > 0, beta > 0
  /// (all finite).
  void validate() const;
};

/// z = omega^2 lambda^(-2/3) / 2 and t_reduced = T lambda^(-1/3), with m = 1.
struct RescaledParams {
  double z = 0.0;
  double t_reduced = 1.0;

  void validate() const;
};

/// Requires mass == 1 (the convention the dimensionless form is defined in).
RescaledParams rescale(const ModelParams& params);

/// Inverse of rescale() at a chosen coupling; returns mass = 1.
ModelParams unrescale(const RescaledParams& rescaled, double lambda);

/// Thermal two-point function on the imaginary-time circle [0, beta]:
///   G(tau, tau') = cosh(beta*W/2 - W|tau - tau'|) / (2 m W sinh(beta*W/2)).
///
/// Evaluated as (e^{-W s} + e^{-W (beta - s)}) / (2 m W (1 - e^{-beta W})),
/// which stays finite for any beta*W.
class Propagator {
 public:
  Propagator(double omega_big, double mass, double beta);

  double omega_big() const { return omega_big_; }
  double mass() const { return mass_; }
  double beta() const { return beta_; }

  /// Both times must lie in [0, beta].
  double eval(double tau, double tau_prime) const;

  /// Same as eval() for a separation s = |tau - tau'|. Unchecked: s must lie
  /// in [0, beta].
  double at_separation(double s) const noexcept {
    return scale_ * (std::exp(-omega_big_ * s) + std::exp(-omega_big_ * (beta_ - s)));
  }

  /// ln G at separation s, finite where G itself underflows (beta W >~ 1400).
  double log_at_separation(double s) const;

  /// G(tau, tau) = coth(beta W / 2) / (2 m W).
  double coincident() const;

  /// Matsubara partial sum (1/beta) sum_{|n| <= n_max} cos(w_n s) / (m (w_n^2 + W^2)),
  /// w_n = 2 pi n / beta. The imaginary parts of the +n and -n terms cancel.
  double matsubara(double s, long n_max) const;

 private:
  double omega_big_;
  double mass_;
  double beta_;
  double scale_;  // 1 / (2 m W (1 - e^{-beta W}))
};

/// Free energy of a harmonic oscillator of frequency nu:
///   (1/beta) ln(2 sinh(beta nu / 2)) = nu/2 + (1/beta) ln(1 - e^{-beta nu}).
/// Independent of the mass.
double harmonic_free_energy(double mass, double nu, double beta);

}  // namespace anharm
