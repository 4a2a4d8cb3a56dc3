#pragma once

#include "idgames/quantum.hpp"

#include <json.hpp>

namespace idg {

// {"dims": [...], "state": {"re": [...], "im": [...]},
//  "effects": [player][input][output] -> {"re": [[...]], "im": [[...]]}}
nlohmann::json strategy_to_json(const QuantumStrategy& qs);
QuantumStrategy strategy_from_json(const nlohmann::json& doc);

}  // namespace idg
