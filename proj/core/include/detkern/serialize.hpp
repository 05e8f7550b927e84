#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "detkern/basis.hpp"
#include "detkern/gram.hpp"
#include "detkern/theorems.hpp"

namespace detkern {

// JSON forms used by the command-line tool and config files. All output
// is deterministic: keys are emitted sorted and doubles use the shortest
// round-trip representation.

nlohmann::json interval_to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);

nlohmann::json member_to_json(const Member& m);
Member member_from_json(const nlohmann::json& j);

nlohmann::json function_set_to_json(const FunctionSet& s);
FunctionSet function_set_from_json(const nlohmann::json& j,
                                   const std::string& fallback_name);

nlohmann::json gram_to_json(const GramMatrix& g);

nlohmann::json report_to_json(const TheoremReport& r);

}  // namespace detkern
