#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ramsey/calibrate.hpp"
#include "ramsey/cavity_state.hpp"
#include "ramsey/duality.hpp"
#include "ramsey/fringe.hpp"

namespace ramsey {

using nlohmann::json;

json to_json(const CavityState& state);
CavityState cavity_state_from_json(const json& j);

json to_json(const DualityReport& report);
json to_json(const FringeScan& scan);
json to_json(const CalibrationResult& result);
json to_json(const std::vector<SweepRow>& rows);

// CSV emitters. Numbers are printed with 17 significant digits so the text
// round-trips to the exact double and reruns diff clean.
std::string format_double(double x);
std::string to_csv(const FringeScan& scan);                 // header: phi,p_a
std::string to_csv(const std::vector<SweepRow>& rows);      // header: nbar,...
std::string to_csv(const DualityReport& report);
std::string to_csv(const CalibrationResult& result);

}  // namespace ramsey
