#include "anharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "anharm/errors.hpp"

namespace anharm {

namespace {

// Product of propagator powers with vertex positions taken from ordered
// coordinates: position[order[r]] = coords[r] (plus a pinned vertex at 0).
class DiagramIntegrand {
 public:
  DiagramIntegrand(const Propagator& g, const DiagramSpec& d, std::vector<int> vertex_of_coord, int pinned)
      : g_(g), edges_(d.edges), vertex_of_coord_(std::move(vertex_of_coord)), pinned_(pinned),
        position_(static_cast<std::size_t>(d.order), 0.0) {}

  double operator()(std::span<const double> coords) {
    for (std::size_t r = 0; r < coords.size(); ++r) position_[vertex_of_coord_[r]] = coords[r];
    if (pinned_ >= 0) position_[pinned_] = 0.0;
    double value = 1.0;
    for (const auto& e : edges_) {
      const double gv = g_.at_separation(std::abs(position_[e.a] - position_[e.b]));
      double pw = gv;
      for (int k = 1; k < e.power; ++k) pw *= gv;
      value *= pw;
    }
    return value;
  }

 private:
  Propagator g_;
  std::vector<Edge> edges_;
  std::vector<int> vertex_of_coord_;
  int pinned_;
  std::vector<double> position_;
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

void QuadratureSettings::validate() const {
  if (nodes_per_panel < 1 || initial_panels < 1 || max_panels < initial_panels) {
    throw ValidationError("quadrature node and panel counts must be positive with max_panels >= initial_panels");
  }
  if (!(rel_tol > 0.0)) throw ValidationError("quadrature tolerance must be positive");
}

QuadratureSettings default_quadrature_settings(int order) {
  QuadratureSettings s;
  switch (order) {
    case 2: s.max_panels = 512; break;
    case 3: s.max_panels = 64; break;
    case 4:
      s.initial_panels = 2;
      s.max_panels = 8;
      s.rel_tol = 1e-5;
      break;
    default: throw ValidationError("no quadrature defaults for order " + std::to_string(order));
  }
  return s;
}

double diagram_integral(const Propagator& g, const DiagramSpec& diagram, int panels, const GaussLegendreRule& rule,
                        Execution execution, QuadPath path) {
  const int n = diagram.order;
  const bool reduced = path == QuadPath::TranslationReduced;
  std::vector<int> free_vertices(reduced ? n - 1 : n);
  std::iota(free_vertices.begin(), free_vertices.end(), reduced ? 1 : 0);
  const int dim = static_cast<int>(free_vertices.size());

  double total = 0.0;
  do {
    DiagramIntegrand f(g, diagram, free_vertices, reduced ? 0 : -1);
    total += execution == Execution::Parallel ? integrate_simplex_parallel(dim, g.beta(), panels, rule, f)
                                              : integrate_simplex_serial(dim, g.beta(), panels, rule, f);
  } while (std::next_permutation(free_vertices.begin(), free_vertices.end()));
  return reduced ? g.beta() * total : total;
}

QuadratureResult quad_diagram(const ModelParams& params, double omega_big, const DiagramSpec& diagram,
                              const QuadratureSettings& settings) {
  params.validate();
  settings.validate();
  validate(diagram);
  const Propagator g(omega_big, params.mass, params.beta);
  const GaussLegendreRule rule = gauss_legendre(settings.nodes_per_panel);
  const double prefactor = diagram.sign * std::pow(params.lambda, diagram.order) /
                           (params.beta * factorial(diagram.order)) * static_cast<double>(diagram.symmetry_factor);

  int panels = settings.initial_panels;
  double previous = prefactor * diagram_integral(g, diagram, panels, rule, settings.execution, settings.path);
  while (true) {
    panels *= 2;
    if (panels > settings.max_panels) {
      throw ConvergenceError("quadrature of diagram " + diagram.name + " did not converge", previous,
                             std::abs(previous) * settings.rel_tol);
    }
    const double current = prefactor * diagram_integral(g, diagram, panels, rule, settings.execution, settings.path);
    const double err = std::abs(current - previous);
    if (err <= settings.rel_tol * std::abs(current)) return {current, err, panels};
    if (panels * 2 > settings.max_panels) {
      throw ConvergenceError("quadrature of diagram " + diagram.name + " did not converge", current, err);
    }
    previous = current;
  }
}

QuadratureResult quad_correction(int order, const ModelParams& params, double omega_big,
                                 const QuadratureSettings& settings) {
  QuadratureResult total;
  for (const auto& d : diagrams_of_order(order)) {
    const auto r = quad_diagram(params, omega_big, d, settings);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.panels = std::max(total.panels, r.panels);
  }
  return total;
}

}  // namespace anharm
