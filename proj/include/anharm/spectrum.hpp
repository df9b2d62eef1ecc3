#pragma once

// Exact free energy from the spectrum of H = p^2/(2m) + m w^2 x^2/2 + lambda x^4,
// diagonalized in the eigenbasis of a reference oscillator (m, nu).

#include <cstddef>
#include <optional>
#include <vector>

#include "anharm/model.hpp"

namespace anharm {

/// Dense row-major symmetric matrix.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Matrix of H in the lowest basis_size states of the oscillator (m, nu):
///   nu (n + 1/2) delta + m (w^2 - nu^2) x^2 / 2 + lambda x^4,
/// with x_{n,n+1} = sqrt((n + 1) / (2 m nu)) and x^2, x^4 formed as products
/// of the x matrix on a padded basis, then truncated.
/// Requires nu > 0 and basis_size >= 4.
SymmetricMatrix build_hamiltonian(const ModelParams& params, double basis_frequency, int basis_size);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  int basis_size = 0;
  double basis_frequency = 0.0;
  /// Leading eigenvalues that agree with the previous basis size to the
  /// spectral tolerance (0 when no comparison was made).
  int converged_count = 0;
};

/// All eigenvalues of build_hamiltonian(params, nu, basis_size). The even and
/// odd parity blocks are diagonalized separately.
Spectrum diagonalize(const ModelParams& params, double basis_frequency, int basis_size);

/// Number of leading eigenvalues of `coarse` matched by `fine` within
/// tol * max(1, |E|).
int count_converged(const Spectrum& coarse, const Spectrum& fine, double tol);

struct ExactSettings {
  double tol = 1e-10;             // on the free energy between basis doublings
  int initial_basis = 64;
  int max_basis = 2048;
  double weight_cutoff = 1e-16;   // Boltzmann weights e^{-beta (E - E0)} below this are dropped
  std::optional<double> basis_frequency;  // default: gap-equation W

  void validate() const;
};

struct ExactResult {
  double free_energy = 0.0;
  int basis_size = 0;
  double basis_frequency = 0.0;
  int levels_used = 0;
  /// Bound on the free energy error from dropping Boltzmann terms.
  double truncation_bound = 0.0;
  /// |F(N) - F(N/2)| at the final basis size.
  double basis_change = 0.0;
  Spectrum spectrum;
};

/// F = E0 - T ln sum_k e^{-beta (E_k - E0)} over the trusted levels of `spectrum`.
/// Sets levels_used and truncation_bound of the result; throws ConvergenceError
/// when the weights have not dropped below the cutoff inside `usable` levels.
ExactResult boltzmann_free_energy(const Spectrum& spectrum, double beta, int usable, double weight_cutoff);

/// Doubles the basis from settings.initial_basis until the free energy changes
/// by less than settings.tol. Throws ConvergenceError (estimate, bound) when
/// max_basis is reached first.
ExactResult exact_free_energy(const ModelParams& params, const ExactSettings& settings = {});

}  // namespace anharm
