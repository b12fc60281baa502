#pragma once

#include <json.hpp>
#include <string>

#include "gammaq/state.hpp"

namespace gammaq {

// State file format (JSON):
//   {
//     "dims": [2, 2, 2],
//     "entries": [ { "ket": "001", "re": 1.0, "im": 0.0 }, ... ],
//     "normalize": true
//   }
// "ket" holds one base-N_u digit per subsystem, 0-based, so digit d stands
// for basis label k = d + 1. Digits above 9 are not supported, which caps
// the file format at N_u <= 10. Unknown fields are rejected.
// With "normalize": false the amplitudes must already be unit norm within
// 1e-9; by default the vector is renormalized on load.

std::string ket_string(const Dims& dims, std::int64_t joint);
MultiIndex parse_ket(const Dims& dims, const std::string& ket);

PureState parse_state_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const PureState& state);

PureState read_state_file(const std::string& path);
void write_state_file(const PureState& state, const std::string& path);

}  // namespace gammaq
