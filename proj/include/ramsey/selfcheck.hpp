#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramsey {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  // worst-case observation, for diagnostics
};

// Deterministic invariant suite spanning all modules: state normalization,
// pointwise unitarity, probability conservation, duality identities,
// dense-oracle and fringe-oracle equivalences, calibration contracts.
std::vector<CheckOutcome> run_selfcheck();

// Prints one line per check plus a summary; returns the number of failures.
int report_selfcheck(std::ostream& os);

}  // namespace ramsey
