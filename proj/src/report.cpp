#include "anharm/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <string>

#include "anharm/errors.hpp"
#include "anharm/literature.hpp"
#include "anharm/series.hpp"

namespace anharm {

namespace {

constexpr std::array<double, 5> kFig2Stiffness{0.2, 1.0, 10.0, 30.0, 50.0};

std::optional<double> finite_or_none(double v) {
  if (std::isfinite(v)) return v;
  return std::nullopt;
}

void attach(ResultRow& row, const std::string& name, const PrintedValue& v) {
  row.literature.emplace_back(name, v.value);
}

void append_message(ResultRow& row, const std::string& text) {
  if (!row.message.empty()) row.message += "; ";
  row.message += text;
}

double linspace(double a, double b, int i, int n) { return a + (b - a) * i / (n - 1); }

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Converged: return "converged";
    case Status::Degraded: return "degraded";
    case Status::Failed: return "failed";
  }
  return "unknown";
}

const char* to_string(Command command) {
  switch (command) {
    case Command::Table1: return "table1";
    case Command::Table2: return "table2";
    case Command::Fig1: return "fig1";
    case Command::Fig2: return "fig2";
    case Command::Fig3: return "fig3";
    case Command::Point: return "point";
    case Command::Sweep: return "sweep";
    case Command::OracleCheck: return "oracle-check";
  }
  return "unknown";
}

void RunRequest::validate() const {
  if (!is_valid_order(max_order)) {
    throw ValidationError("order must be 0, 2, 3 or 4, got " + std::to_string(max_order));
  }
  const bool needs_grid = command == Command::Point || command == Command::Sweep || command == Command::OracleCheck;
  if (needs_grid && grid.empty()) throw ValidationError("parameter grid is empty");
  for (const auto& p : grid) p.validate();
  if (points < 2) throw ValidationError("figures need at least 2 points");
  if (!(gap_tol > 0.0)) throw ValidationError("tolerance must be positive");
  exact_settings.validate();
}

bool ResultRow::ok() const {
  const auto good = [](std::optional<Status> s) { return !s || *s == Status::Converged; };
  return series_status == Status::Converged && good(exact_status) && good(quad_status);
}

double oracle_tolerance(int order) { return order == 4 ? 1e-4 : 1e-6; }

ResultRow run_point(const ModelParams& params, const RunRequest& request) {
  params.validate();
  ResultRow row;
  row.params = params;
  if (params.mass == 1.0) row.rescaled = rescale(params);
  row.max_order = request.max_order;

  try {
    const FreeEnergySeries s = series_eval(params, request.max_order, request.gap_tol);
    row.omega_big = s.omega_big;
    row.f0 = s.f0;
    if (s.max_order >= 2) row.f2 = s.f2();
    if (s.max_order >= 3) row.f3 = s.f3();
    if (s.max_order >= 4) row.f4 = s.f4();
    for (const auto* v : {&row.f0, &row.f2, &row.f3, &row.f4}) {
      if (*v && !std::isfinite(**v)) {
        row.series_status = Status::Degraded;
        append_message(row, "non-finite series value");
      }
    }
  } catch (const ConvergenceError& e) {
    row.series_status = Status::Failed;
    append_message(row, e.what());
  }

  if (request.exact) {
    try {
      const ExactResult e = exact_free_energy(params, request.exact_settings);
      row.exact = e.free_energy;
      row.exact_bound = e.truncation_bound + e.basis_change;
      row.exact_basis = e.basis_size;
      row.exact_status = Status::Converged;
    } catch (const ConvergenceError& e) {
      row.exact = finite_or_none(e.estimate());
      row.exact_bound = finite_or_none(e.error_bound());
      row.exact_status = row.exact ? Status::Degraded : Status::Failed;
      append_message(row, e.what());
    }
  }

  if (request.quadrature && row.omega_big) {
    row.quad_status = Status::Converged;
    const double w = *row.omega_big;
    std::array<std::optional<double>*, 3> closed{&row.c2, &row.c3, &row.c4};
    std::array<std::optional<double>*, 3> quad{&row.quad_c2, &row.quad_c3, &row.quad_c4};
    for (int n = 2; n <= request.max_order; ++n) {
      *closed[n - 2] = correction_closed(n, params, w);
      try {
        *quad[n - 2] = quad_correction(n, params, w, default_quadrature_settings(n)).value;
      } catch (const ConvergenceError& e) {
        *quad[n - 2] = finite_or_none(e.estimate());
        row.quad_status = Status::Degraded;
        append_message(row, e.what());
      }
    }
  }
  return row;
}

std::vector<ResultRow> run_rows(const std::vector<ModelParams>& grid, const RunRequest& request) {
  std::vector<ResultRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const auto n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = run_point(grid[i], request);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<ResultRow> run_table1(const RunRequest& request) {
  const Literature& lit = literature();
  std::vector<ModelParams> grid;
  for (const auto& entry : lit.table1) grid.push_back(unrescale({lit.table1_z, entry.t_reduced.value}, 1.0));
  RunRequest r = request;
  r.max_order = 4;
  r.exact = true;
  auto rows = run_rows(grid, r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = lit.table1[i];
    attach(rows[i], "lit_F0", e.f0);
    attach(rows[i], "lit_F2", e.f2);
    attach(rows[i], "lit_F3", e.f3);
    attach(rows[i], "lit_F4", e.f4);
    attach(rows[i], "lit_F_accu", e.f_accu);
  }
  return rows;
}

std::vector<ResultRow> run_table2(const RunRequest& request) {
  const Literature& lit = literature();
  std::vector<ModelParams> grid;
  for (const auto& entry : lit.table2) grid.push_back({1.0, 1.0, entry.lambda.value, entry.beta.value});
  RunRequest r = request;
  r.max_order = std::min(request.max_order, 3);
  r.exact = true;
  auto rows = run_rows(grid, r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = lit.table2[i];
    attach(rows[i], "lit_F0", e.f0);
    attach(rows[i], "lit_F2", e.f2);
    attach(rows[i], "lit_F3", e.f3);
    attach(rows[i], "lit_F_kr1", e.f_kr1);
    attach(rows[i], "lit_F_kr3", e.f_kr3);
    attach(rows[i], "lit_F_exact", e.f_exact);
  }
  return rows;
}

std::vector<ResultRow> run_figure(Figure which, const RunRequest& request) {
  if (request.points < 2) throw ValidationError("figures need at least 2 points");
  RunRequest r = request;
  r.max_order = 4;
  r.quadrature = false;
  std::vector<ModelParams> grid;
  std::vector<std::string> labels;
  const int n = request.points;
  switch (which) {
    case Figure::Fig1:
      r.exact = true;
      for (int i = 1; i <= n; ++i) grid.push_back({1.0, 1.0, 1.0, static_cast<double>(n) / i});
      break;
    case Figure::Fig2:
      r.exact = false;
      for (double z : kFig2Stiffness) {
        for (int i = 0; i < n; ++i) {
          grid.push_back(unrescale({z, linspace(1.0, 50.0, i, n)}, 1.0));
          labels.push_back("z=" + format_number(z));
        }
      }
      break;
    case Figure::Fig3:
      r.exact = true;
      for (int i = 0; i < n; ++i) grid.push_back({1.0, 0.0, 1.0, linspace(1.0, 20.0, i, n)});
      break;
  }
  auto rows = run_rows(grid, r);
  if (which == Figure::Fig2) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].series = labels[i];
      rows[i].f2.reset();
      rows[i].f3.reset();
    }
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const RunRequest& request) {
  request.validate();
  return run_rows(request.grid, request);
}

std::vector<ResultRow> run_oracle_check(const RunRequest& request) {
  RunRequest r = request;
  r.quadrature = true;
  r.validate();
  auto rows = run_rows(r.grid, r);
  for (auto& row : rows) {
    const std::array<std::pair<std::optional<double>, std::optional<double>>, 3> pairs{
        {{row.c2, row.quad_c2}, {row.c3, row.quad_c3}, {row.c4, row.quad_c4}}};
    for (int n = 2; n <= r.max_order; ++n) {
      const auto& [closed, quad] = pairs[n - 2];
      if (!closed || !quad) continue;
      const double gap = std::abs(*closed - *quad) / std::abs(*quad);
      if (!(gap <= oracle_tolerance(n))) {
        row.quad_status = Status::Degraded;
        append_message(row, "closed form and quadrature differ at order " + std::to_string(n));
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run(const RunRequest& request) {
  request.validate();
  switch (request.command) {
    case Command::Table1: return run_table1(request);
    case Command::Table2: return run_table2(request);
    case Command::Fig1: return run_figure(Figure::Fig1, request);
    case Command::Fig2: return run_figure(Figure::Fig2, request);
    case Command::Fig3: return run_figure(Figure::Fig3, request);
    case Command::Point:
    case Command::Sweep: return run_sweep(request);
    case Command::OracleCheck: return run_oracle_check(request);
  }
  throw ValidationError("unknown command");
}

}  // namespace anharm
