// Command-line front end: constants, verify-maxwell, solve, observables,
// report, export-field.
//
// Exit codes: 0 success, 1 verification or claim failure, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torus/constants.hpp"
#include "torus/field_export.hpp"
#include "torus/maxwell.hpp"
#include "torus/observables.hpp"
#include "torus/report.hpp"
#include "torus/solver.hpp"

namespace {

using nlohmann::json;
using namespace torus;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::vector<std::size_t> resolution{32, 64, 64};
  double h = 1e-5;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::string mode = "full";
  std::string schwinger = "on";
  double tol = 1e-12;
  int max_iter = 50;
  std::string out;
  std::string format = "json";
  double omega_scale = 1.0;
  std::optional<double> E0;
  std::optional<double> R0;
  std::optional<double> r0;
  std::vector<double> times;
  std::vector<std::size_t> lattice{33, 16, 33};
};

Resolution resolution_of(const CliConfig& cfg) {
  return {cfg.resolution[0], cfg.resolution[1], cfg.resolution[2]};
}

SamplingConfig sampling_of(const CliConfig& cfg) {
  SamplingConfig s;
  s.n_points = cfg.samples;
  s.seed = cfg.seed;
  s.h = cfg.h;
  return s;
}

bool schwinger_on(const CliConfig& cfg) { return cfg.schwinger == "on"; }

// Output path honoring TORUS_OUTPUT_DIR for relative paths.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (const char* dir = std::getenv("TORUS_OUTPUT_DIR"); dir != nullptr && p.is_relative()) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const CliConfig& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  const auto path = resolve_output(cfg.out);
  std::ofstream f(path);
  if (!f) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  f << body;
  f.close();
  if (!f) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

// Solved parameters for the configured mode, with any user overrides applied.
AnsatzParams working_params(const CliConfig& cfg, const PhysicalConstants& k) {
  const auto mode = parse_solve_mode(cfg.mode);
  SolveResult sr = mode == SolveMode::thin_torus
                       ? solve_thin_torus(k, schwinger_on(cfg))
                       : solve_full(k, electron_constraints(k, mode, schwinger_on(cfg)),
                                    std::nullopt, {cfg.tol, cfg.max_iter});
  const double E0 = cfg.E0.value_or(sr.E0);
  const double R0 = cfg.R0.value_or(sr.R0);
  const double r0 = cfg.r0.value_or(sr.r0);
  return AnsatzParams::with_omega(E0, R0, r0, cfg.omega_scale * faraday_omega(R0, k.c), k);
}

int cmd_constants(const CliConfig& cfg) {
  const auto k = codata_constants();
  const auto doc = constants_document(k, derived_scales(k));
  const auto format = parse_format(cfg.format);
  if (format == Format::json) {
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << std::setprecision(17);
    if (format == Format::csv) {
      os << "name,value\n";
      for (const auto& [key, value] : doc.items()) {
        os << key << ',' << value.get<double>() << '\n';
      }
    } else {
      for (const auto& [key, value] : doc.items()) {
        os << key << " = " << value.get<double>() << '\n';
      }
    }
    emit(cfg, os.str());
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg) {
  const auto k = codata_constants();
  const auto params = working_params(cfg, k);
  const auto result = full_verification(params, sampling_of(cfg));
  emit(cfg, json(result.reports).dump(2) + "\n");
  return result.all_passed ? kExitOk : kExitFailure;
}

int cmd_solve(const CliConfig& cfg) {
  const auto k = codata_constants();
  const auto ds = derived_scales(k);
  const auto mode = parse_solve_mode(cfg.mode);
  SolveResult sr = mode == SolveMode::thin_torus
                       ? solve_thin_torus(k, schwinger_on(cfg))
                       : solve_full(k, electron_constraints(k, mode, schwinger_on(cfg)),
                                    std::nullopt, {cfg.tol, cfg.max_iter});
  json doc{{"solve", sr}, {"ratios", ratio_report(sr, ds)}};
  emit(cfg, doc.dump(2) + "\n");
  return sr.converged ? kExitOk : kExitFailure;
}

int cmd_observables(const CliConfig& cfg) {
  const auto k = codata_constants();
  const auto params = working_params(cfg, k);
  const QuadratureGrid grid(params.geometry(), resolution_of(cfg));
  emit(cfg, json(compute_observables(params, grid)).dump(2) + "\n");
  return kExitOk;
}

int cmd_report(const CliConfig& cfg) {
  ReportConfig rc;
  rc.resolution = resolution_of(cfg);
  rc.sampling = sampling_of(cfg);
  rc.solve_options = {cfg.tol, cfg.max_iter};
  rc.include_schwinger = schwinger_on(cfg);
  const auto format = parse_format(cfg.format);
  const auto report = assemble_report(rc);

  CliConfig file_cfg = cfg;
  if (file_cfg.out.empty()) {
    file_cfg.out = format == Format::json ? "torus_report.json"
                   : format == Format::csv ? "torus_claims.csv"
                                           : "torus_report.txt";
  }
  emit(file_cfg, render(report, format));
  std::cerr << "wrote " << resolve_output(file_cfg.out).string() << " (overall "
            << (report.overall_pass ? "PASS" : "FAIL") << ")\n";
  return report.overall_pass ? kExitOk : kExitFailure;
}

int cmd_export_field(const CliConfig& cfg) {
  const auto k = codata_constants();
  const auto params = working_params(cfg, k);
  ExportGrid grid;
  grid.n_R = cfg.lattice[0];
  grid.n_phi = cfg.lattice[1];
  grid.n_z = cfg.lattice[2];
  if (!cfg.times.empty()) {
    grid.times = cfg.times;
  }
  std::ostringstream csv;
  write_field_csv(csv, params, grid);
  emit(cfg, csv.str());
  if (!cfg.out.empty()) {
    CliConfig header_cfg = cfg;
    header_cfg.out = cfg.out + ".json";
    emit(header_cfg, field_export_header(params, grid).dump(2) + "\n");
  }
  return kExitOk;
}

void add_output_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
}

void add_param_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "Parameter source: thin or full solve")
      ->check(CLI::IsMember({"thin", "full"}));
  sub->add_option("--schwinger", cfg.schwinger, "Anomalous moment factor in the target")
      ->check(CLI::IsMember({"on", "off"}));
  sub->add_option("--omega-scale", cfg.omega_scale, "Multiply the Faraday frequency");
  sub->add_option("--E0", cfg.E0, "Override field amplitude [V/m]");
  sub->add_option("--R0", cfg.R0, "Override major radius [m]");
  sub->add_option("--r0", cfg.r0, "Override minor radius [m]");
  sub->add_option("--tol", cfg.tol, "Solver tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", cfg.max_iter, "Solver iteration cap")
      ->check(CLI::PositiveNumber);
}

void add_resolution_flag(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--resolution", cfg.resolution, "Quadrature nodes n_r n_theta n_phi")
      ->expected(3)
      ->check(CLI::Range(std::size_t{4}, std::size_t{4096}));
}

void add_sampling_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--fd-step", cfg.h, "Relative finite-difference step")->check(CLI::PositiveNumber);
  sub->add_option("--samples", cfg.samples, "Random interior samples")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Sampling seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toroidal electron field workbench"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* constants = app.add_subcommand("constants", "Dump CODATA constants and derived scales");
  constants->add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  add_output_flags(constants, cfg);

  auto* verify = app.add_subcommand("verify-maxwell", "Residual checks of the Maxwell equations");
  add_param_flags(verify, cfg);
  add_sampling_flags(verify, cfg);
  add_output_flags(verify, cfg);

  auto* solve = app.add_subcommand("solve", "Fit E0, R0, r0 to spin, charge and moment");
  solve->add_option("--mode", cfg.mode, "thin or full")->check(CLI::IsMember({"thin", "full"}));
  solve->add_option("--schwinger", cfg.schwinger, "on or off")
      ->check(CLI::IsMember({"on", "off"}));
  solve->add_option("--tol", cfg.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", cfg.max_iter, "Newton iteration cap")
      ->check(CLI::PositiveNumber);
  add_output_flags(solve, cfg);

  auto* observables = app.add_subcommand("observables", "Charge, moment, spin, energy");
  add_param_flags(observables, cfg);
  add_resolution_flag(observables, cfg);
  add_output_flags(observables, cfg);

  auto* report = app.add_subcommand("report", "Full comparison against the published numbers");
  report->add_option("--schwinger", cfg.schwinger, "on or off")
      ->check(CLI::IsMember({"on", "off"}));
  report->add_option("--tol", cfg.tol, "Solver tolerance")->check(CLI::PositiveNumber);
  report->add_option("--max-iter", cfg.max_iter, "Newton iteration cap")
      ->check(CLI::PositiveNumber);
  report->add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  add_resolution_flag(report, cfg);
  add_sampling_flags(report, cfg);
  add_output_flags(report, cfg);

  auto* export_field = app.add_subcommand("export-field", "Sample fields on a lattice as CSV");
  add_param_flags(export_field, cfg);
  export_field->add_option("--time", cfg.times, "Time slice [s]; repeatable");
  export_field->add_option("--lattice", cfg.lattice, "Lattice points n_R n_phi n_z")
      ->expected(3)
      ->check(CLI::PositiveNumber);
  add_output_flags(export_field, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*observables) return cmd_observables(cfg);
    if (*report) return cmd_report(cfg);
    if (*export_field) return cmd_export_field(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
