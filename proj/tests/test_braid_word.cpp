#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/error.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/temperley_lieb.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using testing_helpers::B;

TEST_CASE("parse and format round trip") {
  for (const char* text : {"B3: 1 -2 1", "B2:", "B1:", "B5: 4 -4 3 1 -2"}) {
    CHECK(format_braid(parse_braid(text)) == text);
  }
  CHECK_THROWS_AS(parse_braid("B3: 3"), ParseError);
  CHECK_THROWS_AS(parse_braid("B3: 0"), ParseError);
  CHECK_THROWS_AS(parse_braid("3: 1"), ParseError);
  CHECK_THROWS_AS(parse_braid("B0:"), ParseError);
  CHECK_THROWS_AS(parse_braid("B2: x"), ParseError);
  CHECK_THROWS_AS(parse_braid("B2: 99999999999999999999"), ParseError);
}

TEST_CASE("constructor validates letters") {
  CHECK_THROWS_AS(BraidWord(2, {{2, 1}}), Error);
  CHECK_THROWS_AS(BraidWord(2, {{1, 2}}), Error);
  CHECK_THROWS_AS(BraidWord(0), Error);
}

TEST_CASE("compose concatenates without reducing") {
  CHECK(compose(B("B3:"), B("B3: 1")) == B("B3: 1"));
  CHECK(compose(B("B3: 1"), B("B3: -2")) == B("B3: 1 -2"));
  CHECK(compose(B("B3: 1 2"), B("B3: -2 -1")) == B("B3: 1 2 -2 -1"));
  CHECK_THROWS_AS(compose(B("B3: 1"), B("B2: 1")), Error);
}

TEST_CASE("invert reverses and negates") {
  CHECK(invert(B("B3:")) == B("B3:"));
  CHECK(invert(B("B3: 1 -2")) == B("B3: 2 -1"));
  CHECK(invert(B("B2: 1 1")) == B("B2: -1 -1"));
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(B("B2: 1 -1")) == B("B2:"));
  CHECK(free_reduce(B("B3: -2 1 -1 2 2")) == B("B3: 2"));
  CHECK(free_reduce(B("B3: 1 2 1")) == B("B3: 1 2 1"));
}

TEST_CASE("free reduction does not depend on the cancellation order") {
  // Brute force over every order of single cancellations.
  const BraidWord w = B("B3: -2 1 -1 2 2 -2 1 -1");
  std::vector<BraidWord> stack{w};
  std::vector<BraidWord> ends;
  while (!stack.empty()) {
    BraidWord cur = stack.back();
    stack.pop_back();
    bool any = false;
    for (std::size_t p = 0; p + 1 < cur.length(); ++p) {
      if (cur.letters()[p] == cur.letters()[p + 1].inverse()) {
        stack.push_back(cancel_pair(cur, p));
        any = true;
      }
    }
    if (!any) ends.push_back(cur);
  }
  for (const auto& e : ends) CHECK(e == free_reduce(w));
}

TEST_CASE("free_reduction_steps replays to free_reduce") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    BraidWord w = random_braid(rng, 3, 12);
    BraidWord cur = w;
    for (auto p : free_reduction_steps(w)) cur = cancel_pair(cur, p);
    CHECK(cur == free_reduce(w));
  }
}

TEST_CASE("pair insertion and cancellation") {
  CHECK(insert_pair(B("B3: 1"), 1, {2, -1}) == B("B3: 1 -2 2"));
  CHECK(cancel_pair(B("B3: 1 -2 2"), 1) == B("B3: 1"));
  CHECK_THROWS_AS(cancel_pair(B("B3: 1 2"), 0), Error);
  CHECK_THROWS_AS(cancel_pair(B("B3: 1 -1"), 1), Error);
  CHECK_THROWS_AS(insert_pair(B("B3: 1"), 2, {1, 1}), Error);
}

TEST_CASE("braid relations") {
  using K = RelationKind;
  using D = RelationDirection;
  CHECK(apply_relation(B("B3: 1 2 1"), 0, K::yang_baxter, D::forward) == B("B3: 2 1 2"));
  CHECK(apply_relation(B("B3: 2 1 2"), 0, K::yang_baxter, D::backward) == B("B3: 1 2 1"));
  CHECK(apply_relation(B("B4: 1 3"), 0, K::far_commute, D::forward) == B("B4: 3 1"));
  CHECK_THROWS_AS(apply_relation(B("B3: 1 2"), 0, K::far_commute, D::forward), Error);
  // Signed forms.
  CHECK(apply_relation(B("B3: -1 -2 -1"), 0, K::yang_baxter, D::forward) == B("B3: -2 -1 -2"));
  CHECK(apply_relation(B("B3: 1 2 -1"), 0, K::yang_baxter, D::forward) == B("B3: -2 1 2"));
  CHECK_FALSE(relation_applies(B("B3: 1 -2 1"), 0, K::yang_baxter, D::forward));
  CHECK_FALSE(relation_applies(B("B3: -1 2 -1"), 0, K::yang_baxter, D::forward));
}

TEST_CASE("every signed Yang-Baxter rewrite is an identity in the braid group") {
  // Checked through the Temperley-Lieb bracket of the relator w * inverse(w').
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      for (int c : {1, -1}) {
        const BraidWord w(3, {{1, a}, {2, b}, {1, c}});
        if (!relation_applies(w, 0, RelationKind::yang_baxter, RelationDirection::forward)) {
          CHECK((a == c && a == -b));
          continue;
        }
        const BraidWord r = apply_relation(w, 0, RelationKind::yang_baxter, RelationDirection::forward);
        const BraidWord relator = compose(w, invert(r));
        CHECK(permutation(relator) == Permutation::identity(3));
        CHECK(bracket_via_tl(relator) == bracket_via_tl(BraidWord(3)));
        // Also as a 4-strand word with a probe strand crossing through.
        const BraidWord probe(4, {{3, 1}, {2, -1}, {1, 1}});
        auto lift = [](const BraidWord& x) { return BraidWord(4, x.letters()); };
        CHECK(bracket_via_tl(compose(compose(probe, lift(w)), invert(probe))) ==
              bracket_via_tl(compose(compose(probe, lift(r)), invert(probe))));
      }
    }
  }
}

TEST_CASE("relation sites are all applicable") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_braid(rng, 5, 10);
    for (const auto& s : relation_sites(w)) CHECK(relation_applies(w, s.position, s.kind, s.direction));
  }
}

TEST_CASE("permutation, exponent sum and components") {
  CHECK(permutation(B("B3:")) == Permutation::identity(3));
  CHECK(permutation(B("B2: 1")).images == std::vector<int>{1, 0});
  CHECK(permutation(B("B3: 1 2")).cycle_count() == 1);
  CHECK(exponent_sum(B("B2:")) == 0);
  CHECK(exponent_sum(B("B2: 1 1 1")) == 3);
  CHECK(exponent_sum(B("B3: 1 -2")) == 0);
  CHECK(closure_components(B("B3:")) == 3);
  CHECK(closure_components(B("B2: 1")) == 1);
  CHECK(closure_components(B("B2: 1 1")) == 2);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(B("B2:"), 1, 1) == B("B2: -1 1"));
  CHECK(free_reduce(conjugate(B("B2:"), 1, 1)) == B("B2:"));
  CHECK(conjugate(B("B3: 2"), 1, 1) == B("B3: -1 2 1"));
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const BraidWord a = random_braid(rng, 4, 8);
    const int g = rng.uniform(1, 3);
    CHECK(exponent_sum(conjugate(a, g, rng.coin() ? 1 : -1)) == exponent_sum(a));
  }
}

TEST_CASE("commute rotation") {
  CHECK(commute_rotate(B("B3: 1 2"), 1) == B("B3: 2 1"));
  const BraidWord a = B("B4: 1 -2 3 2");
  CHECK(commute_rotate(a, 0) == a);
  CHECK(commute_rotate(a, a.length()) == a);
  CHECK(normalized_jones(commute_rotate(a, 3)) == normalized_jones(a));
}

TEST_CASE("stabilization") {
  CHECK(stabilize(B("B2: 1"), 1, 1) == B("B3: 1 2"));
  CHECK(stabilize(B("B1:"), 0, -1) == B("B2: -1"));
  const BraidWord s = stabilize(B("B2: 1 1"), 1, 1);
  CHECK(s == B("B3: 1 2 1"));
  CHECK(closure_components(s) == 2);
  CHECK(closure_components(B("B2: 1 1")) == 2);
  CHECK(normalized_jones(s) == normalized_jones(B("B2: 1 1")));
}

TEST_CASE("destabilization") {
  CHECK(destabilize(B("B3: 1 2")) == B("B2: 1"));
  CHECK_FALSE(destabilize(B("B3: 2 1 -2")).has_value());
  CHECK(destabilize(B("B2: 1")) == B("B1:"));
  const auto d = destabilize_detail(B("B3: 1 -2 1"));
  REQUIRE(d);
  CHECK(d->position == 1);
  CHECK(d->sign == -1);
  CHECK(stabilize(d->word, d->position, d->sign) == B("B3: 1 -2 1"));
}
