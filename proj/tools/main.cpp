// Command-line front end: duality reports, fringe scans, Rabi-phase
// calibration, coherent-state sweeps and the invariant selfcheck suite.

#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "ramsey/run_config.hpp"

namespace {

using ramsey::CalibrationTarget;
using ramsey::Command;
using ramsey::OutputFormat;
using ramsey::RunConfig;

struct CommonFlags {
  std::string state_spec;
  double theta = -1.0;
  double theta_pi = -1.0;
  bool has_theta = false;
  bool has_theta_pi = false;
  std::string regime;
  std::string nbar_spec;
  std::string format;
  std::string output_path;
};

void add_shared_options(CLI::App* cmd, RunConfig& config, CommonFlags& flags) {
  cmd->add_option("--lambda", config.lambda,
                  "normalized detuning (default 0)");
  cmd->add_option("--eps-trunc", config.eps_trunc,
                  "Fock-space truncation tolerance (default 1e-12)");
  cmd->add_option("--format", flags.format, "output format: csv or json");
  cmd->add_option("--output", flags.output_path,
                  "write the artifact to this file instead of stdout");
}

void add_state_option(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--state", flags.state_spec,
                  "initial cavity state: coherent:NBAR, fock:N or "
                  "thermal:NBAR")
      ->required();
}

void add_theta_options(CLI::App* cmd, CommonFlags& flags) {
  auto* t = cmd->add_option("--theta", flags.theta, "Rabi phase in radians");
  auto* tp = cmd->add_option("--theta-pi", flags.theta_pi,
                             "Rabi phase as a multiple of pi");
  t->excludes(tp);
  tp->excludes(t);
}

void add_regime_option(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--regime", flags.regime,
                  "operating point: symmetric or asymmetric")
      ->required();
}

int finalize(RunConfig& config, const CLI::App* cmd, CommonFlags& flags) {
  if (cmd->count("--theta")) config.theta = flags.theta;
  if (cmd->count("--theta-pi"))
    config.theta = flags.theta_pi * std::numbers::pi;
  if (!flags.state_spec.empty())
    config.state = ramsey::parse_state_spec(flags.state_spec);
  if (!flags.nbar_spec.empty())
    config.nbar_grid = ramsey::parse_grid(flags.nbar_spec);
  if (!flags.regime.empty()) {
    if (flags.regime == "symmetric") {
      config.regime = CalibrationTarget::Symmetric;
    } else if (flags.regime == "asymmetric" ||
               flags.regime == "max-asymmetric" ||
               flags.regime == "max_asymmetric") {
      config.regime = CalibrationTarget::MaxAsymmetric;
    } else {
      throw CLI::ValidationError("--regime",
                                 "must be symmetric or asymmetric");
    }
  }
  if (!flags.format.empty()) {
    if (flags.format == "csv") {
      config.format = OutputFormat::Csv;
    } else if (flags.format == "json") {
      config.format = OutputFormat::Json;
    } else {
      throw CLI::ValidationError("--format", "must be csv or json");
    }
  }
  if (!flags.output_path.empty()) config.output_path = flags.output_path;
  return ramsey::run(config, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey interferometer duality simulator"};
  app.require_subcommand(1);

  RunConfig config;
  CommonFlags flags;

  auto* report = app.add_subcommand(
      "report", "duality quantities P, Q, D, V for one configuration");
  add_state_option(report, flags);
  add_theta_options(report, flags);
  add_shared_options(report, config, flags);

  auto* fringe = app.add_subcommand(
      "fringe", "output probability versus the Ramsey phase");
  add_state_option(fringe, flags);
  add_theta_options(fringe, flags);
  fringe->add_option("--points", config.n_points,
                     "number of phase samples (default 721)");
  add_shared_options(fringe, config, flags);

  auto* calibrate = app.add_subcommand(
      "calibrate", "tune the Rabi phase for a target operating point");
  add_state_option(calibrate, flags);
  add_regime_option(calibrate, flags);
  add_shared_options(calibrate, config, flags);

  auto* sweep = app.add_subcommand(
      "sweep", "per-nbar calibrated duality table over a coherent grid");
  add_regime_option(sweep, flags);
  sweep->add_option("--nbar", flags.nbar_spec,
                    "mean photon grid: start:stop:step or a comma list")
      ->required();
  add_shared_options(sweep, config, flags);

  auto* selfcheck =
      app.add_subcommand("selfcheck", "run the invariant suites");
  selfcheck->add_option("--output", flags.output_path,
                        "write the report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) config.command = Command::Report;
    if (fringe->parsed()) config.command = Command::Fringe;
    if (calibrate->parsed()) config.command = Command::Calibrate;
    if (sweep->parsed()) config.command = Command::Sweep;
    if (selfcheck->parsed()) config.command = Command::Selfcheck;
    const CLI::App* active = app.get_subcommands().front();
    return finalize(config, active, flags);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 1;
  }
}
