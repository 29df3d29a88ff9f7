#include "braidcalc/json_io.hpp"

#include "braidcalc/error.hpp"

namespace braidcalc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const char* event_name(EventKind k) {
  switch (k) {
    case EventKind::cup: return "cup";
    case EventKind::cap: return "cap";
    case EventKind::cross_pos: return "x+";
    case EventKind::cross_neg: return "x-";
  }
  return "?";
}

}  // namespace

json braid_to_json(const BraidWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters()) letters.push_back(l.generator * l.exponent);
  return {{"strands", w.strands()}, {"letters", letters}};
}

BraidWord braid_from_json(const json& j) {
  const int n = as_int(field(j, "strands"), "strands");
  const json& arr = field(j, "letters");
  if (!arr.is_array()) bad("letters must be an array");
  std::vector<Letter> letters;
  for (const auto& x : arr) {
    const int v = as_int(x, "letter");
    if (v == 0) bad("letter 0 is not a generator");
    letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
  }
  try {
    return BraidWord(n, std::move(letters));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json diagram_to_json(const MorseDiagram& d, const std::optional<Orientation>& o) {
  json events = json::array();
  for (const auto& e : d.events) events.push_back(json::array({event_name(e.kind), e.column}));
  json out{{"events", events}};
  if (o) out["orient"] = o->flags;
  return out;
}

ParsedDiagram diagram_from_json(const json& j) {
  const json& arr = field(j, "events");
  if (!arr.is_array()) bad("events must be an array");
  ParsedDiagram p;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) bad("an event is [name, column]");
    const auto name = e[0].get<std::string>();
    EventKind kind;
    if (name == "cup") kind = EventKind::cup;
    else if (name == "cap") kind = EventKind::cap;
    else if (name == "x+") kind = EventKind::cross_pos;
    else if (name == "x-") kind = EventKind::cross_neg;
    else bad("unknown event '" + name + "'");
    p.diagram.events.push_back({kind, as_int(e[1], "column")});
  }
  try {
    validate(p.diagram);
  } catch (const Error& e) {
    bad(e.what());
  }
  if (j.contains("orient")) {
    const json& flags = j["orient"];
    if (!flags.is_array()) bad("orient must be an array");
    Orientation o;
    for (const auto& f : flags) {
      const int v = as_int(f, "orientation flag");
      if (v != 1 && v != -1) bad("orientation flags are 1 or -1");
      o.flags.push_back(v);
    }
    if (static_cast<int>(o.flags.size()) != components(p.diagram)) bad("orient must list every component");
    p.orientation = std::move(o);
  }
  return p;
}

json step_to_json(const MoveStep& step) {
  json params = json::object();
  for (const auto& [k, v] : step.params) params[k] = v;
  return {{"move", step.move}, {"params", params}, {"result", braid_to_json(step.result)}};
}

MoveStep step_from_json(const json& j) {
  MoveStep s;
  const json& move = field(j, "move");
  if (!move.is_string()) bad("move must be a string");
  s.move = move.get<std::string>();
  const json& params = field(j, "params");
  if (!params.is_object()) bad("params must be an object");
  for (const auto& [k, v] : params.items()) s.params.emplace_back(k, as_int(v, "parameter"));
  s.result = braid_from_json(field(j, "result"));
  return s;
}

json trace_to_json(const MoveTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(step_to_json(s));
  return {{"start", braid_to_json(trace.start)}, {"steps", steps}};
}

MoveTrace trace_from_json(const json& j) {
  MoveTrace t;
  t.start = braid_from_json(field(j, "start"));
  const json& steps = field(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  for (const auto& s : steps) t.steps.push_back(step_from_json(s));
  return t;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::not_equivalent: return "not_equivalent";
    case SearchOutcome::exhausted: return "exhausted";
  }
  return "?";
}

json search_report_to_json(const SearchResult& r) {
  json out{{"outcome", to_string(r.outcome)},
           {"states_explored", r.states_explored},
           {"frontier_bound_hit", r.frontier_bound_hit}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.trace) out["trace"] = trace_to_json(*r.trace);
  return out;
}

}  // namespace braidcalc
