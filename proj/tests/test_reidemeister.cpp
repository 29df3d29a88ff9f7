#include <doctest.h>

#include "braidcalc/braiding.hpp"
#include "braidcalc/error.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/reidemeister.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using namespace testing_helpers;

namespace {
LaurentPoly m(LaurentPoly::Coefficient c, int e) { return LaurentPoly::monomial(c, e); }

// The inserted R1 crossing's writhe contribution, read off by comparing the
// rewritten diagram's writhe to the original's.
void check_site(const MorseDiagram& d, const RSite& s) {
  const Rewrite r = apply_reidemeister(d, s);
  REQUIRE_NOTHROW(validate(r.diagram));
  CHECK(components(r.diagram) == components(d));
  const Orientation o = orient(d);
  const Orientation o2 = carry_orientation(d, o, r.diagram, r.start, r.removed, r.inserted);
  const LaurentPoly b = kauffman_bracket(d);
  const LaurentPoly b2 = kauffman_bracket(r.diagram);
  if (s.move == RMove::r1) {
    const int dw = writhe(r.diagram, o2) - writhe(d, o);
    CHECK(std::abs(dw) == 1);
    // A kink of writhe +-1 multiplies the bracket by -A^{+-3}.
    CHECK(b2 == b * m(-1, 3 * dw));
  } else {
    CHECK(b2 == b);
  }
  CHECK(f_polynomial(b2, writhe(r.diagram, o2)) == f_polynomial(b, writhe(d, o)));
}
}  // namespace

TEST_CASE("R1 on the unknot") {
  const MorseDiagram u = D(kUnknot);
  for (auto v : {RVariant::kink_left, RVariant::kink_right}) {
    for (int sign : {1, -1}) {
      const MorseDiagram k = apply_r1(u, {RMove::r1, v, 1, 1, sign});
      const LaurentPoly b = kauffman_bracket(k);
      CHECK((b == m(-1, 3) || b == m(-1, -3)));
      check_site(u, {RMove::r1, v, 1, 1, sign});
    }
  }
}

TEST_CASE("R2 insertion then removal is the identity") {
  const MorseDiagram d = D(kTrefoil);
  for (const auto& s : reidemeister_sites(d)) {
    if (s.move != RMove::r2 || s.variant == RVariant::remove) continue;
    const Rewrite r = apply_reidemeister(d, s);
    bool undone = false;
    for (std::size_t i = 0; i < r.diagram.events.size(); ++i) {
      RSite rm{RMove::r2, RVariant::remove, i, 1, 1};
      try {
        if (apply_reidemeister(r.diagram, rm).diagram == d) undone = true;
      } catch (const Error&) {
      }
    }
    CHECK(undone);
  }
}

TEST_CASE("R3 keeps the bracket") {
  const MorseDiagram d = closure(B("B3: 1 2 1"));
  const RSite s{RMove::r3, RVariant::forward, 3, 1, 1};
  const Rewrite r = apply_reidemeister(d, s);
  CHECK(r.diagram == closure(B("B3: 2 1 2")));
  CHECK(kauffman_bracket(r.diagram) == kauffman_bracket(d));
  CHECK_THROWS_AS(apply_reidemeister(closure(B("B3: 1 -2 1")), s), Error);
}

TEST_CASE("wrong move kind and bad sites") {
  const MorseDiagram u = D(kUnknot);
  CHECK_THROWS_AS(apply_r2(u, {RMove::r1, RVariant::kink_left, 0, 1, 1}), Error);
  CHECK_THROWS_AS(apply_reidemeister(u, {RMove::r1, RVariant::kink_left, 9, 1, 1}), Error);
  CHECK_THROWS_AS(apply_reidemeister(u, {RMove::r1, RVariant::kink_left, 0, 1, 1}), Error);
}

TEST_CASE("every site on a seeded corpus keeps the invariants") {
  Rng rng(31);
  std::size_t checked = 0;
  for (int t = 0; t < 25; ++t) {
    const MorseDiagram d = random_diagram(rng, {5, 6, 20});
    for (const auto& s : reidemeister_sites(d)) {
      check_site(d, s);
      ++checked;
    }
  }
  CHECK(checked > 500);
}
