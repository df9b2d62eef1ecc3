#pragma once

// Direct numerical evaluation of diagram integrals.
//
// The propagator depends on |tau - tau'|, so a diagram integrand is smooth on
// each ordered sub-domain tau_{i1} <= ... <= tau_{ik} and kinked across them.
// Integration therefore runs over ordered simplices, one per vertex ordering,
// each with a nested panel Gauss-Legendre rule whose inner limits follow the
// outer variable.

#include <cstddef>
#include <span>
#include <vector>

#include "anharm/diagrams.hpp"
#include "anharm/model.hpp"

namespace anharm {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule (n >= 1), nodes by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

enum class Execution { Serial, Parallel };

/// Fix one vertex at tau = 0 and integrate the remaining n - 1 over the
/// (n-1)! orderings (times beta), or integrate all n vertices over the n!
/// orderings of [0, beta]^n.
enum class QuadPath { TranslationReduced, AllOrderings };

struct QuadratureSettings {
  int nodes_per_panel = 32;
  int initial_panels = 4;
  int max_panels = 64;
  double rel_tol = 1e-9;
  Execution execution = Execution::Parallel;
  QuadPath path = QuadPath::TranslationReduced;

  void validate() const;
};

/// Defaults per order: rel_tol 1e-9 for n = 2, 3 and 1e-5 for n = 4.
QuadratureSettings default_quadrature_settings(int order);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |I(P) - I(P/2)|
  int panels = 0;
};

namespace detail {

template <class F>
double simplex_level(int level, double upper, int panels, const GaussLegendreRule& rule, std::vector<double>& coords,
                     F& f) {
  double sum = 0.0;
  const double width = upper / panels;
  for (int p = 0; p < panels; ++p) {
    const double half = 0.5 * width;
    const double left = width * p;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = left + half * (1.0 + rule.nodes[i]);
      coords[level] = v;
      const double inner = level == 0 ? f(std::span<const double>(coords))
                                      : simplex_level(level - 1, v, panels, rule, coords, f);
      sum += half * rule.weights[i] * inner;
    }
  }
  return sum;
}

}  // namespace detail

/// Integral of f over 0 <= v_0 <= v_1 <= ... <= v_{dim-1} <= length. f receives
/// the ascending coordinates. Reference implementation.
template <class F>
double integrate_simplex_serial(int dim, double length, int panels, const GaussLegendreRule& rule, F f) {
  std::vector<double> coords(static_cast<std::size_t>(dim), 0.0);
  return detail::simplex_level(dim - 1, length, panels, rule, coords, f);
}

/// Same rule as integrate_simplex_serial with the outermost nodes distributed
/// over OpenMP threads. Partial results are reduced in node order, so the
/// result is bit-identical to the serial one for any thread count.
/// f must be safe to call concurrently.
template <class F>
double integrate_simplex_parallel(int dim, double length, int panels, const GaussLegendreRule& rule, F f) {
  const int q = static_cast<int>(rule.size());
  const int outer = panels * q;
  std::vector<double> partial(static_cast<std::size_t>(outer), 0.0);
  const double width = length / panels;
  const double half = 0.5 * width;
#pragma omp parallel
  {
    std::vector<double> coords(static_cast<std::size_t>(dim), 0.0);
    F local = f;
#pragma omp for schedule(dynamic)
    for (int j = 0; j < outer; ++j) {
      const int p = j / q;
      const int i = j % q;
      const double v = width * p + half * (1.0 + rule.nodes[i]);
      coords[dim - 1] = v;
      const double inner = dim == 1 ? local(std::span<const double>(coords))
                                    : detail::simplex_level(dim - 2, v, panels, rule, coords, local);
      partial[j] = half * rule.weights[i] * inner;
    }
  }
  double sum = 0.0;
  for (double x : partial) sum += x;
  return sum;
}

/// Integral over [0, beta]^n of the product of propagator powers of the
/// diagram, i.e. without symmetry factor, coupling or sign.
double diagram_integral(const Propagator& g, const DiagramSpec& diagram, int panels, const GaussLegendreRule& rule,
                        Execution execution, QuadPath path);

/// Contribution of one diagram to F^(n):
///   sign * (1/beta) * (lambda^n / n!) * N * integral,
/// with panel doubling from settings.initial_panels until the relative change
/// is below settings.rel_tol. Throws ConvergenceError (estimate, bound) when
/// max_panels is reached first.
QuadratureResult quad_diagram(const ModelParams& params, double omega_big, const DiagramSpec& diagram,
                              const QuadratureSettings& settings);

/// Sum of quad_diagram over all builtin diagrams of the given order.
QuadratureResult quad_correction(int order, const ModelParams& params, double omega_big,
                                 const QuadratureSettings& settings);

}  // namespace anharm
