#pragma once

// JSON views of the library's result types.  Slopes and words are rendered
// as their canonical text forms; integers known to be small are plain JSON
// numbers, everything potentially unbounded is range-checked into int64.

#include "bridgekit/census.hpp"
#include "bridgekit/words.hpp"

#include <json.hpp>

namespace bridgekit {

using json = nlohmann::json;

// Throws if the value does not fit a 64-bit signed integer.
std::int64_t to_i64(const Int& v);

json census_json(const ArborescentLink& link);
json classify_json(const ArborescentLink& link);
json heegaard_json(const SeifertInvariants& inv);
json symmetry_json(const MontesinosLink& link);
json merge_graph_json(const MontesinosLink& link);
json solutions_json(const SfsGroup& group, const SolveWindow& window,
                    const std::set<WSolution>& predicted,
                    const std::optional<std::set<WSolution>>& brute);
json presentation_json(const Presentation& pres);

}  // namespace bridgekit
