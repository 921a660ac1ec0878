#include "ramsey/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey/duality.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/fringe.hpp"
#include "ramsey/selfcheck.hpp"
#include "ramsey/serialization.hpp"

namespace ramsey {

namespace {

double parse_number(const std::string& text) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (consumed != text.size())
    throw std::invalid_argument("trailing characters in number: '" + text +
                                "'");
  if (!std::isfinite(value))
    throw std::invalid_argument("number must be finite: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) parts.push_back(piece);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  require(!spec.empty(), "empty grid spec");
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    require(parts.size() == 3, "grid spec must be start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    require(step > 0.0, "grid step must be positive");
    require(start <= stop, "grid start exceeds stop");
    // Inclusive endpoint, with slack for accumulated rounding.
    for (double v = start; v <= stop + 1e-9 * step; v += step)
      grid.push_back(std::min(v, stop));
  } else {
    for (const std::string& piece : split(spec, ','))
      grid.push_back(parse_number(piece));
  }
  for (double v : grid)
    require(v >= 0.0, "grid values must be nonnegative");
  return grid;
}

StateSpec parse_state_spec(const std::string& spec) {
  const auto sep = spec.find(':');
  require(sep != std::string::npos && sep > 0 && sep + 1 < spec.size(),
          "state spec must be family:value, e.g. coherent:2.5");
  const std::string family = spec.substr(0, sep);
  const std::string value = spec.substr(sep + 1);
  StateSpec out;
  if (family == "coherent" || family == "thermal") {
    out.family = family == "coherent" ? StateSpec::Family::Coherent
                                      : StateSpec::Family::Thermal;
    out.nbar = parse_number(value);
    require(out.nbar >= 0.0, "mean photon number must be >= 0");
  } else if (family == "fock") {
    const double n = parse_number(value);
    require(n >= 0.0 && n == std::floor(n), "fock level must be an integer >= 0");
    out.family = StateSpec::Family::Fock;
    out.n = static_cast<int>(n);
  } else {
    throw std::invalid_argument("unknown state family: '" + family + "'");
  }
  return out;
}

CavityState build_state(const StateSpec& spec, double eps_trunc) {
  switch (spec.family) {
    case StateSpec::Family::Coherent:
      return coherent_state(spec.nbar, eps_trunc);
    case StateSpec::Family::Thermal:
      return thermal_state(spec.nbar, eps_trunc);
    case StateSpec::Family::Fock:
      return fock_state(spec.n, std::max(8, spec.n + 2));
  }
  throw std::logic_error("unreachable");
}

void validate(const RunConfig& config) {
  const bool has_state = config.state.has_value();
  const bool has_theta = config.theta.has_value();
  const bool has_regime = config.regime.has_value();
  const bool has_grid = config.nbar_grid.has_value();
  switch (config.command) {
    case Command::Report:
    case Command::Fringe:
      require(has_state, "--state is required");
      require(has_theta, "--theta (or --theta-pi) is required");
      require(!has_regime && !has_grid,
              "--regime/--nbar do not apply to this command");
      break;
    case Command::Calibrate:
      require(has_state, "--state is required");
      require(has_regime, "--regime is required");
      require(!has_theta && !has_grid,
              "--theta/--nbar do not apply to calibrate");
      break;
    case Command::Sweep:
      require(has_regime, "--regime is required");
      require(has_grid, "--nbar is required");
      require(!has_state && !has_theta,
              "--state/--theta do not apply to sweep");
      require(!config.nbar_grid->empty(), "--nbar grid is empty");
      break;
    case Command::Selfcheck:
      require(!has_state && !has_theta && !has_regime && !has_grid,
              "selfcheck takes no state or calibration flags");
      break;
  }
  if (has_theta) require(*config.theta >= 0.0, "theta must be >= 0");
  require(config.n_points >= 3, "--points must be >= 3");
  require(config.eps_trunc > 0.0 && config.eps_trunc < 1.0,
          "--eps-trunc must lie in (0, 1)");
}

namespace {

OutputFormat default_format(Command command) {
  switch (command) {
    case Command::Report:
    case Command::Calibrate:
      return OutputFormat::Json;
    default:
      return OutputFormat::Csv;
  }
}

void emit(const RunConfig& config, const std::string& text,
          std::ostream& out) {
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file)
      throw std::runtime_error("cannot open output file: " +
                               *config.output_path);
    file << text;
  } else {
    out << text;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const OutputFormat format = config.format.value_or(
        default_format(config.command));
    switch (config.command) {
      case Command::Report: {
        const CavityState state = build_state(*config.state, config.eps_trunc);
        const DualityReport rep =
            duality_report(state, JcParams(*config.theta, config.lambda));
        emit(config,
             format == OutputFormat::Json ? to_json(rep).dump(2) + "\n"
                                          : to_csv(rep),
             out);
        return 0;
      }
      case Command::Fringe: {
        const CavityState state = build_state(*config.state, config.eps_trunc);
        const FringeScan scan = fringe_scan(
            state, JcParams(*config.theta, config.lambda), config.n_points);
        emit(config,
             format == OutputFormat::Json ? to_json(scan).dump(2) + "\n"
                                          : to_csv(scan),
             out);
        return 0;
      }
      case Command::Calibrate: {
        const CavityState state = build_state(*config.state, config.eps_trunc);
        const CalibrationResult cal =
            *config.regime == CalibrationTarget::Symmetric
                ? calibrate_symmetric(state, config.lambda)
                : calibrate_asymmetric(state, config.lambda);
        emit(config,
             format == OutputFormat::Json ? to_json(cal).dump(2) + "\n"
                                          : to_csv(cal),
             out);
        return 0;
      }
      case Command::Sweep: {
        const auto rows = sweep_figure2(*config.regime, *config.nbar_grid,
                                        config.lambda, config.eps_trunc);
        emit(config,
             format == OutputFormat::Json ? to_json(rows).dump(2) + "\n"
                                          : to_csv(rows),
             out);
        for (const SweepRow& row : rows)
          if (!row.ok) {
            err << json{{"error", "calibration failed for nbar = " +
                                      format_double(row.nbar) + ": " +
                                      row.error}}
                       .dump()
                << "\n";
            return 1;
          }
        return 0;
      }
      case Command::Selfcheck: {
        std::ostringstream report;
        const int failures = report_selfcheck(report);
        emit(config, report.str(), out);
        if (failures > 0) {
          err << json{{"error", std::to_string(failures) +
                                    " selfcheck invariant(s) failed"}}
                     .dump()
              << "\n";
          return 1;
        }
        return 0;
      }
    }
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace ramsey
