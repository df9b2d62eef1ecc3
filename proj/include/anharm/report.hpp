#pragma once

// Result rows for the table, figure, point, sweep and oracle-check commands,
// and their CSV / JSON / text-table writers.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anharm/model.hpp"
#include "anharm/quadrature.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/variational.hpp"

namespace anharm {

enum class Command { Table1, Table2, Fig1, Fig2, Fig3, Point, Sweep, OracleCheck };
enum class OutputFormat { Csv, Json, Table };
enum class Figure { Fig1, Fig2, Fig3 };

/// Outcome of one computed group of values in a row.
enum class Status { Converged, Degraded, Failed };

const char* to_string(Status status);
const char* to_string(Command command);

struct RunRequest {
  Command command = Command::Point;
  std::vector<ModelParams> grid;  // used by Point, Sweep and OracleCheck
  int max_order = 4;
  OutputFormat format = OutputFormat::Csv;
  bool exact = false;
  bool quadrature = false;
  double gap_tol = kDefaultGapTolerance;
  ExactSettings exact_settings;
  int points = 20;  // grid resolution for figures

  /// Throws ValidationError on an empty grid (where one is needed), an
  /// invalid order or fewer than 2 figure points.
  void validate() const;
};

struct ResultRow {
  std::string series;  // curve label in figure output, empty otherwise
  ModelParams params;
  std::optional<RescaledParams> rescaled;  // present when mass == 1
  int max_order = 0;

  std::optional<double> omega_big, f0, f2, f3, f4;
  std::optional<double> c2, c3, c4;                 // closed forms, reported next to quadrature
  std::optional<double> quad_c2, quad_c3, quad_c4;  // quadrature oracle
  std::optional<double> quad_tol;
  std::optional<double> exact, exact_bound;
  std::optional<int> exact_basis;
  /// Quoted comparison values, e.g. {"lit_f_accu", 2.26225951564}.
  std::vector<std::pair<std::string, double>> literature;

  Status series_status = Status::Converged;
  std::optional<Status> exact_status;
  std::optional<Status> quad_status;
  std::string message;

  bool ok() const;
};

/// Series values (and oracles when requested) at one parameter point. Solver
/// or oracle failures are recorded in the row's status fields.
ResultRow run_point(const ModelParams& params, const RunRequest& request);

/// z = 10, T in {1, 2, 3, 4, 5, 10, 20, 30}, orders through 4, exact oracle,
/// published values attached.
std::vector<ResultRow> run_table1(const RunRequest& request);

/// The five (lambda, beta) rows at m = omega = 1, orders through 3 (or
/// request.max_order if lower), exact oracle, published values attached.
std::vector<ResultRow> run_table2(const RunRequest& request);

/// Fig1: T in (0, 1], lambda = m = omega = 1, F0..F4 and exact.
/// Fig2: T in [1, 50] for z in {0.2, 1, 10, 30, 50}, F0 and F4.
/// Fig3: z = 0, beta in [1, 20], F0..F4 and exact.
std::vector<ResultRow> run_figure(Figure which, const RunRequest& request);

/// One row per grid point.
std::vector<ResultRow> run_sweep(const RunRequest& request);

/// Closed forms against quadrature (and the exact oracle) on each grid point.
/// A relative gap above the per-order tolerance marks the row Degraded.
std::vector<ResultRow> run_oracle_check(const RunRequest& request);

/// Relative tolerances of the closed-form vs quadrature comparison:
/// 1e-6 for n = 2, 3 and 1e-4 for n = 4.
double oracle_tolerance(int order);

/// Dispatches on request.command (figures via request.points).
std::vector<ResultRow> run(const RunRequest& request);

/// Rows are computed in parallel and returned in grid order.
std::vector<ResultRow> run_rows(const std::vector<ModelParams>& grid, const RunRequest& request);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_json(std::ostream& out, const std::vector<ResultRow>& rows);
void write_table(std::ostream& out, const std::vector<ResultRow>& rows);
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format);

/// 9 significant digits, "%.9g".
std::string format_number(double value);

}  // namespace anharm
