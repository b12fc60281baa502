#pragma once

#include <json.hpp>

#include "gammaq/gamma.hpp"
#include "gammaq/optimizer.hpp"
#include "gammaq/povm.hpp"

namespace gammaq {

// Report schemas:
//   GammaReport -> { "gamma": float, "norms": {"2": 2.0, ...},
//                    "contributions": [{"subset": [1,2], "value": float}, ...],
//                    "term_counts": {"2": int, ...} }
//   OptResult   -> { "optimizer": { "gamma_sup_lower_bound": float,
//                                   "restarts": int, "evaluations": int,
//                                   "per_restart": [float],
//                                   "achieving_parameters": [[float]] },
//                    "report": <GammaReport> }
// Subsets use 1-based subsystem positions.

nlohmann::json to_json(const GammaReport& report);
nlohmann::json to_json(const OptResult& result);
nlohmann::json to_json(const FourierVerification& verification);

}  // namespace gammaq
