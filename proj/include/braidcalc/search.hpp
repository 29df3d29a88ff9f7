#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/move_trace.hpp"

namespace braidcalc {

enum class MoveSet { markov, lmove };
enum class SearchOutcome { found, not_equivalent, exhausted };

// Words are explored up to max(strands of the inputs) + extra_strands strands
// and max(length of the inputs) + extra_length letters after free reduction.
struct SearchBudget {
  std::size_t max_states = 20000;
  int extra_strands = 2;
  std::size_t extra_length = 6;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<MoveTrace> trace;  // set exactly when found
  std::size_t states_explored = 0;
  bool frontier_bound_hit = false;  // stopped by max_states, not by running dry
  std::string reason;              // which invariant differs, for not_equivalent
};

// Called once for every word the search stores, in discovery order.
using StateObserver = std::function<void(const BraidWord&)>;

// Bidirectional breadth-first search between w1 and w2. Invariants (closure
// components and Jones polynomial) are compared first and a difference is the
// only way to get not_equivalent. Each search layer is expanded in
// lexicographic order of the memo keys, so results do not depend on hashing.
//
//   markov: braid relations, free reduction, conjugation, rotation,
//           stabilization anywhere, destabilization. Key: the free and cyclic
//           reduction rotated to its lexicographically least form.
//   lmove:  braid relations, free reduction, L-moves and detected L-move
//           undos. Key: the free reduction.
SearchResult equivalent_bounded(const BraidWord& w1, const BraidWord& w2, MoveSet moves,
                                const SearchBudget& budget = {}, const StateObserver& observer = {});

SearchResult markov_equivalent_bounded(const BraidWord& w1, const BraidWord& w2, const SearchBudget& budget = {});
SearchResult lmove_equivalent_bounded(const BraidWord& w1, const BraidWord& w2, const SearchBudget& budget = {});

// A certificate, made of L-moves, their undos, relations and free reduction
// only, leading from conjugate(a, i, +1) back to a.
SearchResult conjugation_via_lmoves(const BraidWord& a, int i, const SearchBudget& budget = {});

// Steps that take `step.result` back to `before`.
std::vector<MoveStep> reverse_step(const BraidWord& before, const MoveStep& step);

}  // namespace braidcalc
