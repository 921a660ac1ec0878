#include "ramsey/serialization.hpp"

#include <cstdio>
#include <stdexcept>

namespace ramsey {

namespace {

json optional_to_json(const std::optional<double>& v) {
  return v.has_value() ? json(*v) : json(nullptr);
}

std::string target_name(CalibrationTarget t) {
  return t == CalibrationTarget::Symmetric ? "symmetric" : "max_asymmetric";
}

}  // namespace

json to_json(const CavityState& state) {
  json j;
  j["dim"] = state.dim();
  if (state.is_pure()) {
    j["kind"] = "pure";
    std::vector<double> re(state.dim()), im(state.dim());
    const auto& amps = state.amplitudes();
    for (int n = 0; n < state.dim(); ++n) {
      re[n] = amps[n].real();
      im[n] = amps[n].imag();
    }
    j["re"] = re;
    j["im"] = im;
  } else {
    j["kind"] = "diagonal_mixed";
    j["p"] = state.populations();
  }
  return j;
}

CavityState cavity_state_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("dim must be positive");
  if (kind == "pure") {
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (int(re.size()) != dim || int(im.size()) != dim)
      throw std::invalid_argument("amplitude arrays do not match dim");
    std::vector<Complex> amps(dim);
    for (int n = 0; n < dim; ++n) amps[n] = Complex(re[n], im[n]);
    return CavityState::pure(std::move(amps));
  }
  if (kind == "diagonal_mixed") {
    auto pops = j.at("p").get<std::vector<double>>();
    if (int(pops.size()) != dim)
      throw std::invalid_argument("population array does not match dim");
    return CavityState::diagonal_mixed(std::move(pops));
  }
  throw std::invalid_argument("unknown state kind: " + kind);
}

json to_json(const DualityReport& r) {
  return json{{"w_plus", r.w_plus},
              {"w_minus", r.w_minus},
              {"P", r.P},
              {"V", r.V},
              {"V_internal", r.V_internal},
              {"Q", r.Q},
              {"D", r.D},
              {"residual_eq3", optional_to_json(r.residual_eq3)},
              {"residual_dqp", optional_to_json(r.residual_dqp)},
              {"lhs_eq2", r.lhs_eq2}};
}

json to_json(const FringeScan& s) {
  return json{{"phi_values", s.phi_values},
              {"p_a", s.p_a},
              {"extracted_visibility", s.extracted_visibility},
              {"extracted_phase", s.extracted_phase}};
}

json to_json(const CalibrationResult& r) {
  return json{{"theta_star", r.theta_star},
              {"achieved_P", r.achieved_P},
              {"target", target_name(r.target)},
              {"residual", r.residual},
              {"evaluations", r.evaluations}};
}

json to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json j{{"nbar", row.nbar},   {"theta", row.theta}, {"P2", row.P2},
           {"Q2", row.Q2},       {"D2", row.D2},       {"V2", row.V2},
           {"lhs_eq2", row.lhs_eq2}, {"ok", row.ok}};
    if (!row.ok) j["error"] = row.error;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_csv(const FringeScan& scan) {
  std::string out = "phi,p_a\n";
  for (size_t i = 0; i < scan.phi_values.size(); ++i) {
    out += format_double(scan.phi_values[i]);
    out += ',';
    out += format_double(scan.p_a[i]);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "nbar,theta,P2,Q2,D2,V2,lhs_eq2\n";
  for (const SweepRow& r : rows) {
    out += format_double(r.nbar);
    for (double v : {r.theta, r.P2, r.Q2, r.D2, r.V2, r.lhs_eq2}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const DualityReport& r) {
  std::string out =
      "w_plus,w_minus,P,V,V_internal,Q,D,residual_eq3,residual_dqp,lhs_eq2\n";
  out += format_double(r.w_plus);
  for (double v : {r.w_minus, r.P, r.V, r.V_internal, r.Q, r.D}) {
    out += ',';
    out += format_double(v);
  }
  for (const auto& opt : {r.residual_eq3, r.residual_dqp}) {
    out += ',';
    out += opt.has_value() ? format_double(*opt) : "";
  }
  out += ',';
  out += format_double(r.lhs_eq2);
  out += '\n';
  return out;
}

std::string to_csv(const CalibrationResult& r) {
  std::string out = "theta_star,achieved_P,target,residual,evaluations\n";
  out += format_double(r.theta_star);
  out += ',';
  out += format_double(r.achieved_P);
  out += ',';
  out += target_name(r.target);
  out += ',';
  out += format_double(r.residual);
  out += ',';
  out += std::to_string(r.evaluations);
  out += '\n';
  return out;
}

}  // namespace ramsey
