#include <doctest.h>

#include "braidcalc/braiding.hpp"
#include "braidcalc/error.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/temperley_lieb.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using testing_helpers::B;

namespace {
LaurentPoly m(LaurentPoly::Coefficient c, int e) { return LaurentPoly::monomial(c, e); }
}  // namespace

TEST_CASE("identity traces") {
  const LaurentPoly delta = m(-1, 2) - m(1, -2);
  CHECK(TLElement::identity(1).markov_trace() == LaurentPoly(1));
  CHECK(TLElement::identity(3).markov_trace() == delta * delta);
  CHECK(bracket_via_tl(B("B1:")) == LaurentPoly(1));
}

TEST_CASE("small closures") {
  CHECK(bracket_via_tl(B("B2: 1 1")) == m(-1, -4) - m(1, 4));
  CHECK(normalized_jones(B("B1:")) == LaurentPoly(1));
  CHECK(normalized_jones(B("B2: 1")) == LaurentPoly(1));
  CHECK(normalized_jones(B("B2: -1")) == LaurentPoly(1));
  // Figure eight is amphichiral.
  const LaurentPoly f8 = normalized_jones(B("B3: 1 -2 1 -2"));
  CHECK(f8 == f8.substitute_power(-1));
}

TEST_CASE("TL trace matches the diagram state sum") {
  Rng rng(41);
  for (int t = 0; t < 120; ++t) {
    const BraidWord w = random_braid(rng, rng.uniform(2, 5), static_cast<std::size_t>(rng.uniform(0, 10)));
    CHECK(bracket_via_tl(w) == kauffman_bracket(closure(w)));
  }
}

TEST_CASE("cap and fallback") {
  const BraidWord w = B("B10: 1 2 3 4 5 6 7 8 9");
  CHECK_THROWS_AS(bracket_via_tl(w), Error);
  CHECK(normalized_jones(w) == LaurentPoly(1));
  const BraidWord v = B("B4: 1 -2 3 1 -2 3");
  CHECK(normalized_jones(v, 2) == normalized_jones(v));
}

TEST_CASE("packed trace agrees with TLElement") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const BraidWord w = random_braid(rng, rng.uniform(2, 8), static_cast<std::size_t>(rng.uniform(0, 16)));
    CHECK(bracket_via_tl_packed(w) == bracket_via_tl(w));
  }
  // Strands no letter touches close off before the first letter.
  CHECK(bracket_via_tl_packed(B("B4: 2")) == bracket_via_tl(B("B4: 2")));
  CHECK(bracket_via_tl_packed(B("B3:")) == bracket_via_tl(B("B3:")));
}

TEST_CASE("packed trace beyond the TL cap") {
  Rng rng(44);
  for (int t = 0; t < 6; ++t) {
    const BraidWord w = random_braid(rng, rng.uniform(9, 11), 18);
    CHECK(bracket_via_tl_packed(w) == kauffman_bracket_transfer(closure(w)));
  }
  // Both key widths, 16 strands being the last narrow one. A positive
  // stabilization scales the bracket by -A^3; split trefoils with idle
  // strands between them multiply, one delta per extra circle.
  const LaurentPoly trefoil = bracket_via_tl(B("B2: 1 1 1"));
  const LaurentPoly delta = m(-1, 2) - m(1, -2);
  for (int n : {16, 17}) {
    std::vector<Letter> stabilized{{1, 1}, {1, 1}, {1, 1}};
    for (int i = 2; i < n; ++i) stabilized.push_back({i, 1});
    CHECK(bracket_via_tl_packed(BraidWord(n, stabilized)) == trefoil * m(-1, 3).pow(n - 2));
    const BraidWord split(n, {{1, 1}, {n - 2, 1}, {1, 1}, {n - 2, 1}, {1, 1}, {n - 2, 1}});
    CHECK(bracket_via_tl_packed(split) == trefoil * trefoil * delta.pow(n - 3));
  }
  CHECK_THROWS_AS(bracket_via_tl_packed(BraidWord(33, {})), Error);
}

TEST_CASE("packed trace is a conjugacy invariant") {
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    const BraidWord w = random_braid(rng, rng.uniform(2, 10), static_cast<std::size_t>(rng.uniform(1, 14)));
    const LaurentPoly b = bracket_via_tl_packed(w);
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(w.length()) - 1));
    CHECK(bracket_via_tl_packed(commute_rotate(w, k)) == b);
    const std::vector<Letter> back(w.letters().rbegin(), w.letters().rend());
    CHECK(bracket_via_tl_packed(BraidWord(w.strands(), back)) == b);
  }
}
