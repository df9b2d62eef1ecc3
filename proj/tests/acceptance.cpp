// Acceptance gate: one PASS/FAIL line per criterion, indented detail lines
// for failures. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "anharm/literature.hpp"
#include "anharm/model.hpp"
#include "anharm/quadrature.hpp"
#include "anharm/report.hpp"
#include "anharm/series.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/variational.hpp"

using namespace anharm;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string what) {
    pass = false;
    details.push_back(std::move(what));
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_runtime(Outcome& o, double elapsed, double budget) {
  o.summary += fmt(" (%.2f s, budget %.0f s)", elapsed, budget);
  if (elapsed >= budget) o.fail(fmt("runtime %.2f s exceeds %.0f s", elapsed, budget));
}

Outcome table1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_table1(RunRequest{});
  const double elapsed = seconds_since(t0);
  const auto& lit = literature().table1;
  int cells = 0, bad = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::pair<const char*, std::pair<double, double>> cols[] = {
        {"F0", {*rows[i].f0, lit[i].f0.value}},
        {"F2", {*rows[i].f2, lit[i].f2.value}},
        {"F3", {*rows[i].f3, lit[i].f3.value}},
        {"F4", {*rows[i].f4, lit[i].f4.value}}};
    for (const auto& [name, v] : cols) {
      const double tol = std::abs(v.second) < 10 ? 5e-6 : 5e-4;
      ++cells;
      if (!(std::abs(v.first - v.second) <= tol)) {
        ++bad;
        o.fail(fmt("T=%g %s computed %.9g published %.9g |diff| %.2e > %.0e", lit[i].t_reduced.value, name, v.first,
                   v.second, std::abs(v.first - v.second), tol));
      }
    }
  }
  o.summary = fmt("%d/%d cells within 5e-6 (|F|<10) or 5e-4", cells - bad, cells);
  check_runtime(o, elapsed, 5);
  return o;
}

Outcome table2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_table2(RunRequest{});
  const double elapsed = seconds_since(t0);
  const auto& lit = literature().table2;
  int cells = 0, bad = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::pair<const char*, std::pair<double, PrintedValue>> cols[] = {
        {"F0", {*rows[i].f0, lit[i].f0}}, {"F2", {*rows[i].f2, lit[i].f2}}, {"F3", {*rows[i].f3, lit[i].f3}}};
    for (const auto& [name, v] : cols) {
      const double tol = 5 * v.second.last_digit();
      ++cells;
      if (!(std::abs(v.first - v.second.value) <= tol)) {
        ++bad;
        o.fail(fmt("lambda=%g beta=%g %s computed %.9g published %s", lit[i].lambda.value, lit[i].beta.value, name,
                   v.first, v.second.text.c_str()));
      }
    }
  }
  o.summary = fmt("%d/%d cells within 5 units of the last printed digit", cells - bad, cells);
  check_runtime(o, elapsed, 5);
  return o;
}

Outcome exact_oracle() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double a = exact_free_energy(unrescale({10, 1}, 1.0)).free_energy;
  const double b = exact_free_energy({1, 1, 1, 5}).free_energy;
  const double elapsed = seconds_since(t0);
  if (!(std::abs(a - 2.26225951564) <= 1e-8)) o.fail(fmt("z=10 T=1: %.12f vs 2.26225951564", a));
  if (!(std::abs(b - 0.803758) <= 1e-5)) o.fail(fmt("lambda=1 beta=5: %.9f vs 0.803758", b));
  o.summary = fmt("z=10,T=1 -> %.11f (|diff| %.1e); lambda=1,beta=5 -> %.7f (|diff| %.1e)", a,
                  std::abs(a - 2.26225951564), b, std::abs(b - 0.803758));
  check_runtime(o, elapsed, 60);
  return o;
}

// beta chosen so that beta * W hits the target on the gap-equation root.
ModelParams with_reduced_frequency(ModelParams p, double target) {
  for (int i = 0; i < 200; ++i) p.beta = target / solve_gap(p).omega_big;
  return p;
}

Outcome closed_vs_quadrature() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double targets[] = {0.5, 1, 2, 3, 5, 7, 10, 13, 16, 20};
  const ModelParams bases[] = {{1, 1, 1, 1}, {1, 0, 0.5, 1}, {2, 0.7, 0.3, 1}, {1, 3, 2, 1}, {0.5, 1, 5, 1}};
  double worst[3] = {0, 0, 0};
  for (int i = 0; i < 10; ++i) {
    const ModelParams p = with_reduced_frequency(bases[i % 5], targets[i]);
    const double w = solve_gap(p).omega_big;
    for (int n = 2; n <= 4; ++n) {
      const double closed = correction_closed(n, p, w);
      const double quad = quad_correction(n, p, w, default_quadrature_settings(n)).value;
      const double rel = std::abs(closed - quad) / std::abs(quad);
      worst[n - 2] = std::max(worst[n - 2], rel);
      if (!(rel < oracle_tolerance(n))) o.fail(fmt("beta W=%g order %d: relative gap %.2e", targets[i], n, rel));
    }
  }
  o.summary = fmt("10 points, beta W in [0.5, 20]; worst relative gaps c2 %.1e, c3 %.1e, c4 %.1e", worst[0], worst[1],
                  worst[2]);
  check_runtime(o, seconds_since(t0), 600);
  return o;
}

Outcome upper_bound() {
  Outcome o;
  int n = 0;
  double min_margin = 1e300;
  for (double lambda : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    for (double beta : {0.2, 1.0, 5.0, 20.0}) {
      const ModelParams p{1, 1, lambda, beta};
      const double f = f0(p);
      const auto e = exact_free_energy(p);
      const double margin = f - e.free_energy;
      ++n;
      min_margin = std::min(min_margin, margin);
      if (!(margin > e.truncation_bound + e.basis_change)) {
        o.fail(fmt("lambda=%g beta=%g: F0 %.12f exact %.12f", lambda, beta, f, e.free_energy));
      }
    }
  }
  o.summary = fmt("%d grid points, smallest margin F0 - exact = %.3e", n, min_margin);
  return o;
}

Outcome signs_and_limits() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int sign_bad = 0;
  double worst_residual = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ModelParams p{0.3 + 3 * u(rng), 3 * u(rng), std::pow(10.0, -2 + 5 * u(rng)), std::pow(10.0, -2 + 4 * u(rng))};
    const auto s = series_eval(p, 4);
    worst_residual = std::max(worst_residual, s.variational.residual);
    if (!(s.c2 < 0 && s.c3 > 0 && s.c4 < 0)) {
      ++sign_bad;
      o.fail(fmt("signs at m=%g w=%g lambda=%g beta=%g: %g %g %g", p.mass, p.omega, p.lambda, p.beta, s.c2, s.c3, s.c4));
    }
  }
  double worst_free = 0.0;
  for (double beta : {0.1, 1.0, 10.0, 100.0}) {
    for (double omega : {0.5, 1.0, 4.0}) {
      const ModelParams p{1.0, omega, 1e-16, beta};
      const auto s = series_eval(p, 4);
      worst_residual = std::max(worst_residual, s.variational.residual);
      const double h = harmonic_free_energy(1.0, omega, beta);
      const double rel = std::abs(s.f4() - h) / std::abs(h);
      worst_free = std::max(worst_free, rel);
      if (!(rel <= 1e-12)) o.fail(fmt("free limit beta=%g omega=%g: relative %.2e", beta, omega, rel));
    }
  }
  if (!(worst_residual < 1e-12)) o.fail(fmt("gap residual %.2e", worst_residual));
  o.summary = fmt("sign violations %d/200; free-limit relative error %.1e; max gap residual %.1e", sign_bad, worst_free,
                  worst_residual);
  return o;
}

Outcome figure_findings() {
  Outcome o;
  RunRequest r;
  r.points = 10;
  const auto fig1 = run_figure(Figure::Fig1, r);
  const auto& cold = fig1.front();
  const double exact = *cold.exact;
  const bool f2_better = std::abs(*cold.f2 - exact) < std::abs(*cold.f0 - exact);
  const bool f4_below = *cold.f4 < exact - 0.05;
  if (!f2_better) o.fail("Fig1 T=0.1: F2 not closer to exact than F0");
  if (!f4_below) o.fail(fmt("Fig1 T=%.2g: F4 = %.6f is not below exact - 0.05 = %.6f", cold.params.temperature(), *cold.f4,
                            exact - 0.05));

  const auto fig2 = run_figure(Figure::Fig2, r);
  const auto& soft = fig2[9];
  const auto& stiff = fig2[49];
  const double gap_soft = *soft.f0 - *soft.f4;
  const double gap_stiff = *stiff.f0 - *stiff.f4;
  if (!(gap_soft > gap_stiff)) o.fail(fmt("Fig2 T=50: F0-F4 at z=0.2 (%g) not above z=50 (%g)", gap_soft, gap_stiff));
  o.summary = fmt("Fig1 T=0.1: F0 %.5f F2 %.5f F4 %.5f exact %.5f; Fig2 T=50: F0-F4 %.4g (z=0.2) vs %.4g (z=50)",
                  *cold.f0, *cold.f2, *cold.f4, exact, gap_soft, gap_stiff);
  return o;
}

Outcome matsubara() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double lo = 1e300, hi = -1e300, worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Propagator g(0.2 + 5 * u(rng), 0.5 + 2 * u(rng), 0.2 + 5 * u(rng));
    const double closed = g.coincident();
    const double e1 = std::abs(g.matsubara(0.0, 2000) - closed);
    const double e2 = std::abs(g.matsubara(0.0, 4000) - closed);
    const double order = std::log2(e1 / e2);
    lo = std::min(lo, order);
    hi = std::max(hi, order);
    if (!(std::abs(order - 1.0) < 0.05)) o.fail(fmt("observed order %.3f", order));
    const double s = g.beta() * u(rng);
    const double rel = std::abs(g.matsubara(s, 100000) - g.at_separation(s)) / g.at_separation(s);
    worst = std::max(worst, rel);
    if (!(rel < 1e-4)) o.fail(fmt("s=%g relative error %.2e at n_max=1e5", s, rel));
  }
  o.summary = fmt("observed order at s=0 in [%.3f, %.3f]; worst relative error at n_max=1e5 %.1e", lo, hi, worst);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Table I reproduction", table1},
      {"Table II reproduction", table2},
      {"Exact-oracle fidelity", exact_oracle},
      {"Closed-form vs quadrature", closed_vs_quadrature},
      {"Variational upper bound", upper_bound},
      {"Sign/limit properties", signs_and_limits},
      {"Qualitative figure findings", figure_findings},
      {"Matsubara consistency", matsubara},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.summary.c_str());
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed;
}
