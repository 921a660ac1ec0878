#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ramsey/calibrate.hpp"

namespace ramsey {

enum class Command { Report, Fringe, Calibrate, Sweep, Selfcheck };
enum class OutputFormat { Csv, Json };

// Initial cavity preparation requested on the command line,
// e.g. "coherent:2.5", "fock:3", "thermal:1".
struct StateSpec {
  enum class Family { Coherent, Fock, Thermal };
  Family family = Family::Coherent;
  double nbar = 0.0;  // Coherent / Thermal
  int n = 0;          // Fock
};

struct RunConfig {
  Command command = Command::Report;
  std::optional<StateSpec> state;
  std::optional<double> theta;
  double lambda = 0.0;
  std::optional<CalibrationTarget> regime;
  std::optional<std::vector<double>> nbar_grid;
  int n_points = 721;
  double eps_trunc = kDefaultEpsTrunc;
  std::optional<OutputFormat> format;  // per-command default when unset
  std::optional<std::string> output_path;
};

// "start:stop:step" (inclusive) or a comma-separated list; values must be
// nonnegative and the step positive.
std::vector<double> parse_grid(const std::string& spec);

StateSpec parse_state_spec(const std::string& spec);

CavityState build_state(const StateSpec& spec, double eps_trunc);

// Throws std::invalid_argument unless exactly the fields required by the
// command are populated.
void validate(const RunConfig& config);

// Executes the configured command, writing the artifact to the output path
// (or `out`) and machine-readable errors as one-line JSON to `err`.
// Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ramsey
