#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/lmove.hpp"

namespace braidcalc {

// One named rewrite together with the word it produced. Parameters are small
// integers keyed by name so that traces serialize without a schema per move.
//
//   relation     position, yang_baxter (0|1), forward (0|1)
//   free_reduce  (none)
//   cancel_pair  position
//   insert_pair  position, generator, exponent
//   conjugate    generator, sign
//   rotate       k
//   stabilize    at, sign
//   destabilize  position, sign         (position of the removed letter)
//   lmove        over (0|1), sign, split, column
//   lmove_undo   over (0|1), sign, split, column  (result is the source word)
struct MoveStep {
  std::string move;
  std::vector<std::pair<std::string, int>> params;
  BraidWord result;

  int param(std::string_view name) const;
  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveTrace {
  BraidWord start;
  std::vector<MoveStep> steps;

  const BraidWord& final_word() const { return steps.empty() ? start : steps.back().result; }
  friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

MoveStep relation_step(const BraidWord& in, std::size_t position, RelationKind kind, RelationDirection direction);
MoveStep free_reduce_step(const BraidWord& in);
MoveStep cancel_pair_step(const BraidWord& in, std::size_t position);
MoveStep insert_pair_step(const BraidWord& in, std::size_t position, Letter letter);
MoveStep conjugate_step(const BraidWord& in, int generator, int sign);
MoveStep rotate_step(const BraidWord& in, std::size_t k);
MoveStep stabilize_step(const BraidWord& in, std::size_t at, int sign);
// Throws Error{NoMatch} when `in` cannot be destabilized.
MoveStep destabilize_step(const BraidWord& in);
MoveStep lmove_step(const BraidWord& in, const LMoveSpec& spec);
// `source` is a word with free_reduce(apply_lmove(source, spec)) equal to
// free_reduce(in); throws Error{NoMatch} otherwise.
MoveStep lmove_undo_step(const BraidWord& in, const LMoveSpec& spec, const BraidWord& source);

// Recomputes `step` from `in` and returns the result; throws
// Error{ContractViolation} when the recorded result disagrees.
BraidWord apply_step(const BraidWord& in, const MoveStep& step);

// Replays every step from trace.start; throws on the first mismatch.
BraidWord replay(const MoveTrace& trace);

}  // namespace braidcalc
