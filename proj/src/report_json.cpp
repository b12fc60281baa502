#include "gammaq/report_json.hpp"

namespace gammaq {

nlohmann::json to_json(const GammaReport& report) {
  nlohmann::json norms = nlohmann::json::object();
  for (const auto& [size, value] : report.norms.values()) {
    norms[std::to_string(size)] = value;
  }
  nlohmann::json contributions = nlohmann::json::array();
  for (const auto& [subset, value] : report.contributions) {
    contributions.push_back({{"subset", subset}, {"value", value}});
  }
  nlohmann::json term_counts = nlohmann::json::object();
  for (const auto& [size, count] : report.term_counts) {
    term_counts[std::to_string(size)] = count;
  }
  return {{"gamma", report.gamma},
          {"norms", norms},
          {"contributions", contributions},
          {"term_counts", term_counts}};
}

nlohmann::json to_json(const OptResult& result) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& block : result.best_parameters.params) {
    params.push_back(block);
  }
  const nlohmann::json optimizer = {{"gamma_sup_lower_bound", result.best_gamma},
                                    {"restarts", result.per_restart_bests.size()},
                                    {"evaluations", result.evaluations},
                                    {"per_restart", result.per_restart_bests},
                                    {"achieving_parameters", params}};
  return {{"optimizer", optimizer}, {"report", to_json(result.report)}};
}

nlohmann::json to_json(const FourierVerification& verification) {
  return {{"max_abs_error", verification.max_abs_error},
          {"targets", verification.targets},
          {"nodes", verification.nodes},
          {"pass", verification.pass}};
}

}  // namespace gammaq
