#include <doctest.h>

#include "braidcalc/error.hpp"
#include "braidcalc/lmove.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/temperley_lieb.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using testing_helpers::B;

TEST_CASE("column shift") {
  CHECK(shift_word(B("B2: 1"), 1) == B("B3: 2"));
  CHECK(shift_word(B("B2: 1"), 2) == B("B3: 1"));
  CHECK(shift_word(B("B2:"), 3) == B("B3:"));
  CHECK(shift_word(B("B4: 1 -2 3"), 2) == B("B5: 1 -3 4"));
  CHECK_THROWS_AS(shift_word(B("B2: 1"), 4), Error);
  CHECK_THROWS_AS(shift_word(B("B2: 1"), 0), Error);
}

TEST_CASE("L-move examples") {
  const LMoveSpec over_plus{LMoveKind::over, 1, 0, 1};
  const BraidWord raw = apply_lmove(B("B1:"), over_plus);
  CHECK(raw == B("B2: -1 1 1"));
  CHECK(free_reduce(raw) == B("B2: 1"));
  CHECK(closure_components(raw) == 1);

  CHECK(apply_lmove(B("B2: 1"), {LMoveKind::under, -1, 1, 3}) == B("B3: 1 -2"));

  const BraidWord w = apply_lmove(B("B2: 1"), over_plus);
  CHECK(w.strands() == 3);
  CHECK(permutation(w).cycle_count() == 1);
  CHECK(normalized_jones(w) == normalized_jones(B("B2: 1")));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_FALSE(lmove_spec_valid(B("B2: 1"), {LMoveKind::over, 1, 2, 1}));
  CHECK_FALSE(lmove_spec_valid(B("B2: 1"), {LMoveKind::over, 1, 0, 4}));
  CHECK_FALSE(lmove_spec_valid(B("B2: 1"), {LMoveKind::over, 0, 0, 1}));
  CHECK_THROWS_AS(apply_lmove(B("B2: 1"), {LMoveKind::over, 1, 0, 4}), Error);
}

TEST_CASE("grid size and order") {
  const BraidWord a = B("B3: 1 -2");
  const auto grid = lmove_grid(a);
  CHECK(grid.size() == 2 * 2 * 3 * 4);
  for (const auto& s : grid) CHECK(lmove_spec_valid(a, s));
}

TEST_CASE("L-move contract on a random corpus") {
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    const int n = rng.uniform(1, 3);
    const BraidWord a = random_braid(rng, n, n == 1 ? 0 : static_cast<std::size_t>(rng.uniform(0, 5)));
    const auto j = normalized_jones(a);
    for (const auto& s : lmove_grid(a)) {
      const BraidWord b = apply_lmove(a, s);
      CHECK(b.strands() == a.strands() + 1);
      CHECK(closure_components(b) == closure_components(a));
      CHECK(exponent_sum(b) == exponent_sum(a) + s.sign);
      CHECK(normalized_jones(b) == j);
    }
  }
}

TEST_CASE("last column at the word end is stabilization") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const BraidWord a = random_braid(rng, 3, 6);
    for (int sign : {1, -1}) {
      for (auto kind : {LMoveKind::over, LMoveKind::under}) {
        const LMoveSpec s{kind, sign, a.length(), a.strands() + 1};
        CHECK(free_reduce(apply_lmove(a, s)) == free_reduce(stabilize(a, a.length(), sign)));
      }
    }
  }
}

TEST_CASE("spec text form") {
  const LMoveSpec s{LMoveKind::over, 1, 1, 3};
  CHECK(format_lmove_spec(s) == "lmove over + split=1 col=3");
  CHECK(parse_lmove_spec("lmove over + split=1 col=3") == s);
  CHECK(parse_lmove_spec("under - split=0 col=1") == LMoveSpec{LMoveKind::under, -1, 0, 1});
  CHECK_THROWS_AS(parse_lmove_spec("lmove sideways + split=1 col=3"), ParseError);
  CHECK_THROWS_AS(parse_lmove_spec("lmove over + split=x col=3"), ParseError);
  CHECK_THROWS_AS(parse_lmove_spec("lmove over + split=1"), ParseError);
}

TEST_CASE("detecting L-moves") {
  CHECK(detect_lmove(B("B1:")).empty());
  bool found = false;
  for (const auto& u : detect_lmove(B("B3: 1 2"))) {
    CHECK(free_reduce(apply_lmove(u.source, u.spec)) == B("B3: 1 2"));
    if (u.source == B("B2: 1")) found = true;
  }
  CHECK(found);

  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const BraidWord a = random_braid(rng, rng.uniform(2, 3), static_cast<std::size_t>(rng.uniform(0, 5)));
    const auto grid = lmove_grid(a);
    const LMoveSpec s = grid[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(grid.size()) - 1))];
    const BraidWord b = apply_lmove(a, s);
    const auto undos = detect_lmove(b);
    REQUIRE_FALSE(undos.empty());
    bool jones_equal = false;
    for (const auto& u : undos) {
      CHECK(free_reduce(apply_lmove(u.source, u.spec)) == free_reduce(b));
      if (normalized_jones(u.source) == normalized_jones(a)) jones_equal = true;
    }
    CHECK(jones_equal);
  }
}
