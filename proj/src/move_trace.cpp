#include "braidcalc/move_trace.hpp"

#include <algorithm>

#include "braidcalc/error.hpp"

namespace braidcalc {

int MoveStep::param(std::string_view name) const {
  auto it = std::find_if(params.begin(), params.end(), [&](const auto& p) { return p.first == name; });
  if (it == params.end()) {
    throw Error(ErrorCode::ContractViolation, "step '" + move + "' has no parameter '" + std::string(name) + "'");
  }
  return it->second;
}

namespace {

int as_int(std::size_t v) { return static_cast<int>(v); }

std::size_t as_index(int v) {
  if (v < 0) throw Error(ErrorCode::ContractViolation, "negative position in trace step");
  return static_cast<std::size_t>(v);
}

LMoveSpec spec_of(const MoveStep& step) {
  return {step.param("over") != 0 ? LMoveKind::over : LMoveKind::under, step.param("sign"),
          as_index(step.param("split")), step.param("column")};
}

std::vector<std::pair<std::string, int>> spec_params(const LMoveSpec& spec) {
  return {{"over", spec.kind == LMoveKind::over ? 1 : 0},
          {"sign", spec.sign},
          {"split", as_int(spec.split)},
          {"column", spec.column}};
}

}  // namespace

MoveStep relation_step(const BraidWord& in, std::size_t position, RelationKind kind, RelationDirection direction) {
  return {"relation",
          {{"position", as_int(position)},
           {"yang_baxter", kind == RelationKind::yang_baxter ? 1 : 0},
           {"forward", direction == RelationDirection::forward ? 1 : 0}},
          apply_relation(in, position, kind, direction)};
}

MoveStep free_reduce_step(const BraidWord& in) { return {"free_reduce", {}, free_reduce(in)}; }

MoveStep cancel_pair_step(const BraidWord& in, std::size_t position) {
  return {"cancel_pair", {{"position", as_int(position)}}, cancel_pair(in, position)};
}

MoveStep insert_pair_step(const BraidWord& in, std::size_t position, Letter letter) {
  return {"insert_pair",
          {{"position", as_int(position)}, {"generator", letter.generator}, {"exponent", letter.exponent}},
          insert_pair(in, position, letter)};
}

MoveStep conjugate_step(const BraidWord& in, int generator, int sign) {
  return {"conjugate", {{"generator", generator}, {"sign", sign}}, conjugate(in, generator, sign)};
}

MoveStep rotate_step(const BraidWord& in, std::size_t k) {
  return {"rotate", {{"k", as_int(k)}}, commute_rotate(in, k)};
}

MoveStep stabilize_step(const BraidWord& in, std::size_t at, int sign) {
  return {"stabilize", {{"at", as_int(at)}, {"sign", sign}}, stabilize(in, at, sign)};
}

MoveStep destabilize_step(const BraidWord& in) {
  auto d = destabilize_detail(in);
  if (!d) throw Error(ErrorCode::NoMatch, format_braid(in) + " cannot be destabilized");
  return {"destabilize", {{"position", as_int(d->position)}, {"sign", d->sign}}, d->word};
}

MoveStep lmove_step(const BraidWord& in, const LMoveSpec& spec) {
  return {"lmove", spec_params(spec), apply_lmove(in, spec)};
}

MoveStep lmove_undo_step(const BraidWord& in, const LMoveSpec& spec, const BraidWord& source) {
  if (!lmove_spec_valid(source, spec) || free_reduce(apply_lmove(source, spec)) != free_reduce(in)) {
    throw Error(ErrorCode::NoMatch, format_braid(source) + " does not reach " + format_braid(in) + " by " +
                                        format_lmove_spec(spec));
  }
  return {"lmove_undo", spec_params(spec), source};
}

BraidWord apply_step(const BraidWord& in, const MoveStep& step) {
  MoveStep redo;
  const auto& m = step.move;
  if (m == "relation") {
    redo = relation_step(in, as_index(step.param("position")),
                         step.param("yang_baxter") != 0 ? RelationKind::yang_baxter : RelationKind::far_commute,
                         step.param("forward") != 0 ? RelationDirection::forward : RelationDirection::backward);
  } else if (m == "free_reduce") {
    redo = free_reduce_step(in);
  } else if (m == "cancel_pair") {
    redo = cancel_pair_step(in, as_index(step.param("position")));
  } else if (m == "insert_pair") {
    redo = insert_pair_step(in, as_index(step.param("position")), {step.param("generator"), step.param("exponent")});
  } else if (m == "conjugate") {
    redo = conjugate_step(in, step.param("generator"), step.param("sign"));
  } else if (m == "rotate") {
    redo = rotate_step(in, as_index(step.param("k")));
  } else if (m == "stabilize") {
    redo = stabilize_step(in, as_index(step.param("at")), step.param("sign"));
  } else if (m == "destabilize") {
    redo = destabilize_step(in);
  } else if (m == "lmove") {
    redo = lmove_step(in, spec_of(step));
  } else if (m == "lmove_undo") {
    redo = lmove_undo_step(in, spec_of(step), step.result);
  } else {
    throw Error(ErrorCode::ContractViolation, "unknown move '" + m + "'");
  }
  if (redo.result != step.result || redo.params != step.params) {
    throw Error(ErrorCode::ContractViolation, "step '" + m + "' does not reproduce " + format_braid(step.result));
  }
  return redo.result;
}

BraidWord replay(const MoveTrace& trace) {
  BraidWord current = trace.start;
  for (const auto& step : trace.steps) current = apply_step(current, step);
  return current;
}

}  // namespace braidcalc
