#include "anharm/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anharm/errors.hpp"
#include "anharm/variational.hpp"

namespace anharm {

namespace {

// Banded square matrix stored as full rows of width 2*band+1.
struct Banded {
  std::size_t n;
  std::size_t band;
  std::vector<double> values;

  Banded(std::size_t n_, std::size_t band_) : n(n_), band(band_), values(n_ * (2 * band_ + 1), 0.0) {}

  double get(std::size_t i, std::size_t j) const {
    if (i >= n || j >= n) return 0.0;
    const auto d = static_cast<long>(j) - static_cast<long>(i);
    if (std::labs(d) > static_cast<long>(band)) return 0.0;
    return values[i * (2 * band + 1) + static_cast<std::size_t>(d + static_cast<long>(band))];
  }
  void set(std::size_t i, std::size_t j, double v) {
    const auto d = static_cast<long>(j) - static_cast<long>(i);
    values[i * (2 * band + 1) + static_cast<std::size_t>(d + static_cast<long>(band))] = v;
  }
};

Banded multiply(const Banded& a, const Banded& b) {
  Banded c(a.n, a.band + b.band);
  for (std::size_t i = 0; i < a.n; ++i) {
    const std::size_t jlo = i >= c.band ? i - c.band : 0;
    const std::size_t jhi = std::min(a.n - 1, i + c.band);
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const std::size_t klo = i >= a.band ? i - a.band : 0;
      const std::size_t khi = std::min(a.n - 1, i + a.band);
      double s = 0.0;
      for (std::size_t k = klo; k <= khi; ++k) s += a.get(i, k) * b.get(k, j);
      c.set(i, j, s);
    }
  }
  return c;
}

std::vector<double> block_eigenvalues(const SymmetricMatrix& h, std::size_t parity) {
  std::vector<std::size_t> idx;
  for (std::size_t i = parity; i < h.size(); i += 2) idx.push_back(i);
  Eigen::MatrixXd block(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = h(idx[r], idx[c]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed", 0.0, 0.0);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

SymmetricMatrix build_hamiltonian(const ModelParams& params, double basis_frequency, int basis_size) {
  params.validate();
  if (!(std::isfinite(basis_frequency) && basis_frequency > 0.0)) {
    throw ValidationError("basis frequency must be positive");
  }
  if (basis_size < 4) throw ValidationError("basis size must be at least 4");

  const auto n = static_cast<std::size_t>(basis_size);
  const std::size_t padded = n + 4;
  const double m = params.mass;
  const double nu = basis_frequency;

  Banded x(padded, 1);
  for (std::size_t i = 0; i + 1 < padded; ++i) {
    const double v = std::sqrt((static_cast<double>(i) + 1.0) / (2.0 * m * nu));
    x.set(i, i + 1, v);
    x.set(i + 1, i, v);
  }
  const Banded x2 = multiply(x, x);
  const Banded x4 = multiply(x2, x2);

  SymmetricMatrix h(n);
  const double quad = 0.5 * m * (params.omega * params.omega - nu * nu);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t jhi = std::min(n - 1, i + 4);
    for (std::size_t j = i; j <= jhi; ++j) {
      double v = quad * x2.get(i, j) + params.lambda * x4.get(i, j);
      if (i == j) v += nu * (static_cast<double>(i) + 0.5);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

Spectrum diagonalize(const ModelParams& params, double basis_frequency, int basis_size) {
  const SymmetricMatrix h = build_hamiltonian(params, basis_frequency, basis_size);
  Spectrum s;
  s.eigenvalues = block_eigenvalues(h, 0);
  const auto odd = block_eigenvalues(h, 1);
  s.eigenvalues.insert(s.eigenvalues.end(), odd.begin(), odd.end());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.basis_size = basis_size;
  s.basis_frequency = basis_frequency;
  return s;
}

int count_converged(const Spectrum& coarse, const Spectrum& fine, double tol) {
  const std::size_t n = std::min(coarse.eigenvalues.size(), fine.eigenvalues.size());
  std::size_t k = 0;
  while (k < n) {
    const double e = fine.eigenvalues[k];
    if (std::abs(coarse.eigenvalues[k] - e) > tol * std::max(1.0, std::abs(e))) break;
    ++k;
  }
  return static_cast<int>(k);
}

void ExactSettings::validate() const {
  if (!(tol > 0.0)) throw ValidationError("spectral tolerance must be positive");
  if (initial_basis < 4 || max_basis < initial_basis) {
    throw ValidationError("basis sizes must satisfy 4 <= initial_basis <= max_basis");
  }
  if (!(weight_cutoff > 0.0 && weight_cutoff < 1.0)) throw ValidationError("weight cutoff must lie in (0, 1)");
  if (basis_frequency && !(*basis_frequency > 0.0)) throw ValidationError("basis frequency must be positive");
}

ExactResult boltzmann_free_energy(const Spectrum& spectrum, double beta, int usable, double weight_cutoff) {
  const auto& e = spectrum.eigenvalues;
  if (e.empty() || usable < 1) throw ConvergenceError("no trusted eigenvalues", 0.0, 0.0);
  const double e0 = e.front();
  const auto limit = std::min(static_cast<std::size_t>(usable), e.size());
  double z = 0.0;
  std::size_t k = 0;
  double next_weight = 0.0;
  for (; k < limit; ++k) {
    const double w = std::exp(-beta * (e[k] - e0));
    if (w < weight_cutoff) {
      next_weight = w;
      break;
    }
    z += w;
  }
  ExactResult r;
  r.free_energy = e0 - std::log(z) / beta;
  r.levels_used = static_cast<int>(k);
  r.spectrum = spectrum;
  r.basis_size = spectrum.basis_size;
  r.basis_frequency = spectrum.basis_frequency;
  if (k == limit) {
    throw ConvergenceError("Boltzmann weights still above cutoff at the last trusted level", r.free_energy,
                           std::exp(-beta * (e[limit - 1] - e0)) / beta);
  }
  // Geometric tail with the first dropped spacing.
  const double gap = k + 1 < e.size() ? std::max(e[k + 1] - e[k], 1e-300) : e[k] - e[k - 1];
  const double tail = next_weight / (1.0 - std::exp(-beta * gap));
  r.truncation_bound = std::log1p(tail / z) / beta;
  return r;
}

ExactResult exact_free_energy(const ModelParams& params, const ExactSettings& settings) {
  params.validate();
  settings.validate();
  const double nu = settings.basis_frequency ? *settings.basis_frequency : solve_gap(params).omega_big;

  Spectrum previous = diagonalize(params, nu, settings.initial_basis);
  std::optional<ExactResult> previous_result;
  double last_change = std::numeric_limits<double>::infinity();
  for (int n = 2 * settings.initial_basis; n <= settings.max_basis; n *= 2) {
    Spectrum current = diagonalize(params, nu, n);
    const int trusted = count_converged(previous, current, settings.tol);
    current.converged_count = trusted;
    std::optional<ExactResult> result;
    try {
      result = boltzmann_free_energy(current, params.beta, trusted, settings.weight_cutoff);
    } catch (const ConvergenceError&) {
      result.reset();
    }
    if (result) {
      if (previous_result) {
        last_change = std::abs(result->free_energy - previous_result->free_energy);
        result->basis_change = last_change;
        if (last_change < settings.tol) return *result;
      }
      previous_result = result;
    }
    previous = std::move(current);
  }
  const double estimate = previous_result ? previous_result->free_energy : std::numeric_limits<double>::quiet_NaN();
  throw ConvergenceError("exact free energy not converged at basis size " + std::to_string(settings.max_basis),
                         estimate, last_change);
}

}  // namespace anharm
