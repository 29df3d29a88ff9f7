#include <doctest.h>

#include <set>

#include "braidcalc/error.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/search.hpp"
#include "braidcalc/temperley_lieb.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using testing_helpers::B;

namespace {
void check_found(const SearchResult& r, const BraidWord& from, const BraidWord& to) {
  REQUIRE(r.outcome == SearchOutcome::found);
  REQUIRE(r.trace);
  CHECK(r.trace->start == from);
  CHECK(replay(*r.trace) == to);
  CHECK_FALSE(r.frontier_bound_hit);
}
}  // namespace

TEST_CASE("one stabilization apart") {
  const auto m = markov_equivalent_bounded(B("B2: 1"), B("B1:"));
  check_found(m, B("B2: 1"), B("B1:"));
  CHECK(m.trace->steps.size() == 1);
  CHECK(m.trace->steps[0].move == "destabilize");

  const auto l = lmove_equivalent_bounded(B("B2: 1"), B("B1:"));
  check_found(l, B("B2: 1"), B("B1:"));
  CHECK(l.trace->steps.size() == 1);
  CHECK(l.trace->steps[0].move == "lmove_undo");
}

TEST_CASE("invariants decide inequivalence") {
  for (auto moves : {MoveSet::markov, MoveSet::lmove}) {
    const auto r = equivalent_bounded(B("B2: 1 1 1"), B("B2: 1"), moves);
    CHECK(r.outcome == SearchOutcome::not_equivalent);
    CHECK_FALSE(r.trace);
    CHECK(r.reason.find("Jones") != std::string::npos);
  }
  const auto c = markov_equivalent_bounded(B("B2: 1 1"), B("B2: 1"));
  CHECK(c.outcome == SearchOutcome::not_equivalent);
}

TEST_CASE("identical words need no steps") {
  const auto r = markov_equivalent_bounded(B("B3: 1 2"), B("B3: 1 2"));
  check_found(r, B("B3: 1 2"), B("B3: 1 2"));
  CHECK(r.trace->steps.empty());
}

TEST_CASE("a tight budget reports exhaustion, never inequivalence") {
  SearchBudget tiny;
  tiny.max_states = 5;
  const auto r = markov_equivalent_bounded(B("B2: 1 1 1"), B("B4: 3 2 1 1 1 -2 -3 1 2 -1 -2"), tiny);
  CHECK(r.outcome == SearchOutcome::exhausted);
  CHECK(r.frontier_bound_hit);
  CHECK(r.states_explored == 5);
}

TEST_CASE("reverse steps undo every move kind") {
  const BraidWord w = B("B3: 1 -2 2 1 -1");
  std::vector<MoveStep> steps{
      free_reduce_step(w),
      cancel_pair_step(w, 1),
      insert_pair_step(w, 2, {1, -1}),
      conjugate_step(w, 2, 1),
      rotate_step(w, 2),
      stabilize_step(w, 3, -1),
      relation_step(B("B3: 1 2 -1"), 0, RelationKind::yang_baxter, RelationDirection::forward),
      lmove_step(w, {LMoveKind::over, -1, 2, 2}),
  };
  for (const auto& s : steps) {
    const BraidWord before = s.move == "relation" ? B("B3: 1 2 -1") : w;
    MoveTrace back{s.result, reverse_step(before, s)};
    CHECK(replay(back) == before);
  }
  const MoveStep d = destabilize_step(B("B3: 1 2"));
  CHECK(replay({d.result, reverse_step(B("B3: 1 2"), d)}) == B("B3: 1 2"));
  const BraidWord lifted = apply_lmove(B("B2: 1 1"), {LMoveKind::under, 1, 1, 2});
  const auto undos = detect_lmove(lifted);
  REQUIRE_FALSE(undos.empty());
  const MoveStep u = lmove_undo_step(lifted, undos[0].spec, undos[0].source);
  CHECK(replay({u.result, reverse_step(lifted, u)}) == lifted);
}

TEST_CASE("Jones is constant along every explored state") {
  for (auto moves : {MoveSet::markov, MoveSet::lmove}) {
    const BraidWord a = B("B3: 1 -2 1");
    const LaurentPoly j = normalized_jones(a);
    std::size_t seen = 0;
    SearchBudget budget;
    budget.max_states = 400;
    const auto r = equivalent_bounded(a, B("B3: 1 1 -2"), moves, budget, [&](const BraidWord& w) {
      CHECK(normalized_jones(w) == j);
      ++seen;
    });
    CHECK(seen == r.states_explored);
  }
}

TEST_CASE("searches are deterministic") {
  const auto a = markov_equivalent_bounded(B("B3: 1 2 1 2"), B("B3: 2 1 2 2"));
  const auto b = markov_equivalent_bounded(B("B3: 1 2 1 2"), B("B3: 2 1 2 2"));
  CHECK(a.outcome == b.outcome);
  CHECK(a.states_explored == b.states_explored);
  CHECK(a.trace == b.trace);
}

TEST_CASE("pairs joined by random move sequences are found") {
  Rng rng(77);
  for (int t = 0; t < 6; ++t) {
    const BraidWord a = random_braid(rng, 3, 4);
    BraidWord m = stabilize(a, static_cast<std::size_t>(rng.uniform(0, 4)), rng.coin() ? 1 : -1);
    m = free_reduce(conjugate(m, rng.uniform(1, 3), rng.coin() ? 1 : -1));
    const auto rm = markov_equivalent_bounded(a, m);
    CHECK(rm.outcome == SearchOutcome::found);
    if (rm.trace) CHECK(replay(*rm.trace) == m);

    const auto grid = lmove_grid(a);
    const BraidWord l =
        free_reduce(apply_lmove(a, grid[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(grid.size()) - 1))]));
    const auto rl = lmove_equivalent_bounded(a, l);
    CHECK(rl.outcome == SearchOutcome::found);
    if (rl.trace) CHECK(replay(*rl.trace) == l);
  }
}

TEST_CASE("conjugation certificates in B_2") {
  for (const char* text : {"B2:", "B2: 1", "B2: -1 -1"}) {
    const auto r = conjugation_via_lmoves(B(text), 1);
    check_found(r, conjugate(B(text), 1, 1), B(text));
  }
}
