// anharm: free energy of the quartic oscillator from the variational
// perturbation series, with quadrature and exact-spectrum oracles.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "anharm/errors.hpp"
#include "anharm/report.hpp"

namespace {

using namespace anharm;

struct Options {
  std::optional<double> lambda, omega, mass, beta, temp, z, t_reduced;
  int order = 4;
  bool exact = false;
  bool quad = false;
  std::string format = "csv";
  std::string out;
  double tol = kDefaultGapTolerance;
  double exact_tol = 1e-10;
  int points = 20;
  std::string sweep_param = "beta";
  double sweep_from = 1.0;
  double sweep_to = 10.0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--order", o.order, "Highest correction order (0, 2, 3 or 4)")->check(CLI::IsMember({0, 2, 3, 4}));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
  cmd->add_option("--tol", o.tol, "Gap-equation residual tolerance");
  cmd->add_option("--exact-tol", o.exact_tol, "Exact-oracle free energy tolerance");
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "Quartic coupling (default 1)");
  cmd->add_option("--omega", o.omega, "Harmonic frequency (default 1)");
  cmd->add_option("--mass", o.mass, "Mass (default 1)");
  auto* beta = cmd->add_option("--beta", o.beta, "Inverse temperature (default 1)");
  auto* temp = cmd->add_option("--temp", o.temp, "Temperature");
  beta->excludes(temp);
  cmd->add_option("--z", o.z, "Dimensionless stiffness omega^2 lambda^(-2/3) / 2 (m = 1)");
  cmd->add_option("--t-reduced", o.t_reduced, "Reduced temperature T lambda^(-1/3) (m = 1)");
  cmd->add_flag("--exact", o.exact, "Add the exact-spectrum free energy");
  cmd->add_flag("--quad", o.quad, "Add quadrature values of the corrections");
}

ModelParams resolve_params(const Options& o) {
  const double lambda = o.lambda.value_or(1.0);
  if (o.z || o.t_reduced) {
    if (o.omega || o.beta || o.temp || (o.mass && *o.mass != 1.0)) {
      throw ValidationError("--z/--t-reduced cannot be combined with --omega, --beta, --temp or --mass != 1");
    }
    RescaledParams rp{o.z.value_or(0.0), o.t_reduced.value_or(1.0)};
    return unrescale(rp, lambda);
  }
  ModelParams p;
  p.mass = o.mass.value_or(1.0);
  p.omega = o.omega.value_or(1.0);
  p.lambda = lambda;
  if (o.temp) {
    if (!(*o.temp > 0.0)) throw ValidationError("temperature must be positive");
    p.beta = 1.0 / *o.temp;
  } else {
    p.beta = o.beta.value_or(1.0);
  }
  p.validate();
  return p;
}

std::vector<ModelParams> sweep_grid(const Options& o) {
  if (o.points < 2) throw ValidationError("--points must be at least 2");
  std::vector<ModelParams> grid;
  for (int i = 0; i < o.points; ++i) {
    const double v = o.sweep_from + (o.sweep_to - o.sweep_from) * i / (o.points - 1);
    Options at = o;
    const std::string& name = o.sweep_param;
    if (name == "lambda") {
      at.lambda = v;
    } else if (name == "beta") {
      at.beta = v;
      at.temp.reset();
    } else if (name == "temp") {
      at.temp = v;
      at.beta.reset();
    } else if (name == "omega") {
      at.omega = v;
    } else if (name == "z") {
      at.z = v;
    } else if (name == "t-reduced") {
      at.t_reduced = v;
    } else {
      throw ValidationError("unknown sweep parameter '" + name + "'");
    }
    grid.push_back(resolve_params(at));
  }
  return grid;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::Json;
  if (f == "table") return OutputFormat::Table;
  return OutputFormat::Csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free energy of the quartic anharmonic oscillator"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Command> names{
      {"table1", Command::Table1}, {"table2", Command::Table2}, {"fig1", Command::Fig1},
      {"fig2", Command::Fig2},     {"fig3", Command::Fig3},     {"point", Command::Point},
      {"sweep", Command::Sweep},   {"oracle-check", Command::OracleCheck}};
  std::map<std::string, CLI::App*> cmds;
  cmds["table1"] = app.add_subcommand("table1", "z = 10 table at eight temperatures, with exact values");
  cmds["table2"] = app.add_subcommand("table2", "m = omega = 1 table at five (lambda, beta) points, with exact values");
  cmds["fig1"] = app.add_subcommand("fig1", "Low-temperature series, lambda = m = omega = 1");
  cmds["fig2"] = app.add_subcommand("fig2", "F0 and F4 for T in [1, 50] at several z");
  cmds["fig3"] = app.add_subcommand("fig3", "z = 0 series over beta in [1, 20]");
  cmds["point"] = app.add_subcommand("point", "Evaluate one parameter point");
  cmds["sweep"] = app.add_subcommand("sweep", "Evaluate a linear grid in one parameter");
  cmds["oracle-check"] = app.add_subcommand("oracle-check", "Compare closed forms with quadrature and the exact oracle");
  for (auto& [name, cmd] : cmds) add_common(cmd, o);
  for (const char* name : {"point", "sweep", "oracle-check"}) add_params(cmds[name], o);
  for (const char* name : {"fig1", "fig2", "fig3", "sweep"}) {
    cmds[name]->add_option("--points", o.points, "Grid resolution")->check(CLI::Range(2, 100000));
  }
  cmds["sweep"]->add_option("--param", o.sweep_param, "Swept parameter")
      ->check(CLI::IsMember({"lambda", "beta", "temp", "omega", "z", "t-reduced"}));
  cmds["sweep"]->add_option("--from", o.sweep_from, "First value");
  cmds["sweep"]->add_option("--to", o.sweep_to, "Last value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunRequest request;
    for (const auto& [name, cmd] : cmds) {
      if (cmd->parsed()) request.command = names.at(name);
    }
    request.max_order = o.order;
    request.format = parse_format(o.format);
    request.exact = o.exact;
    request.quadrature = o.quad;
    request.gap_tol = o.tol;
    request.exact_settings.tol = o.exact_tol;
    request.points = o.points;
    if (request.command == Command::Point || request.command == Command::OracleCheck) {
      request.grid = {resolve_params(o)};
    } else if (request.command == Command::Sweep) {
      request.grid = sweep_grid(o);
    }

    const auto rows = run(request);

    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw ValidationError("cannot open output file '" + o.out + "'");
    }
    write_rows(o.out.empty() ? std::cout : file, rows, request.format);

    bool all_ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].message.empty()) std::cerr << "row " << i << ": " << rows[i].message << '\n';
      all_ok = all_ok && rows[i].ok();
    }
    return all_ok ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (estimate " << e.estimate() << ", bound " << e.error_bound() << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
