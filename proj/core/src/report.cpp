#include "hiord/report.hpp"

#include <nlohmann/json.hpp>

namespace hiord {

std::string run_report_json(const SolveResult& result) {
  using nlohmann::ordered_json;
  const TerminationCertificate& cert = result.certificate;
  ordered_json j;
  j["schema"] = 1;
  j["termination"] = to_string(cert.kind);
  j["x"] = ordered_json::array();
  for (int i = 0; i < cert.x.size(); ++i) j["x"].push_back(cert.x[i]);
  if (cert.t)
    j["t"] = *cert.t;
  else
    j["t"] = nullptr;
  if (cert.y) {
    j["y"] = ordered_json::array();
    for (int i = 0; i < cert.y->size(); ++i) j["y"].push_back((*cert.y)[i]);
  } else {
    j["y"] = nullptr;
  }
  j["delta"] = cert.delta;
  ordered_json phi;
  for (std::size_t k = 0; k < cert.phi_values.size(); ++k)
    phi[std::to_string(k + 1)] = cert.phi_values[k];
  j["phi"] = phi;
  j["residual_norm"] = cert.residual_norm;
  j["counters"] = {{"phase1_f", result.trace.counters.phase1_f},
                   {"phase1_df", result.trace.counters.phase1_df},
                   {"phase2_f", result.trace.counters.phase2_f},
                   {"phase2_df", result.trace.counters.phase2_df}};
  j["t_history"] = result.trace.t_history;
  ordered_json part = ordered_json::array();
  for (char tag : result.trace.partition) part.push_back(std::string(1, tag));
  j["partition"] = part;
  ordered_json checks;
  for (const auto& [name, ok] : result.trace.invariant_checks) checks[name] = ok;
  j["invariant_checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace hiord
