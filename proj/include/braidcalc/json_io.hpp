#pragma once

#include <json.hpp>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/diagram.hpp"
#include "braidcalc/move_trace.hpp"
#include "braidcalc/search.hpp"

namespace braidcalc {

// {"strands": 3, "letters": [1, -2, 1]}
nlohmann::json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const nlohmann::json& j);

// {"events": [["cup", 1], ["x+", 2], ...], "orient": [1, -1]}; "orient" is
// present only when an orientation is given.
nlohmann::json diagram_to_json(const MorseDiagram& d, const std::optional<Orientation>& o = std::nullopt);
ParsedDiagram diagram_from_json(const nlohmann::json& j);

// {"move": "rotate", "params": {"k": 2}, "result": <braid>}
nlohmann::json step_to_json(const MoveStep& step);
MoveStep step_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const MoveTrace& trace);
MoveTrace trace_from_json(const nlohmann::json& j);

// {"outcome": "found"|"not_equivalent"|"exhausted", "states_explored": N,
//  "frontier_bound_hit": bool, "reason": "...", "trace": {...}}
nlohmann::json search_report_to_json(const SearchResult& r);

const char* to_string(SearchOutcome outcome);

}  // namespace braidcalc
