#include <doctest.h>

#include "braidcalc/braiding.hpp"
#include "braidcalc/error.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/temperley_lieb.hpp"
#include "helpers.hpp"

using namespace braidcalc;
using namespace testing_helpers;

namespace {
ErrorCode code_of(const MorseDiagram& d) {
  try {
    validate(d);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("diagram was accepted");
  return ErrorCode::Precondition;
}
LaurentPoly m(LaurentPoly::Coefficient c, int e) { return LaurentPoly::monomial(c, e); }
}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(D(kUnknot)));
  CHECK(code_of({{{EventKind::cup, 1}}}) == ErrorCode::NonzeroFinalWidth);
  CHECK(code_of({{{EventKind::cup, 1}, {EventKind::cross_pos, 2}, {EventKind::cap, 1}}}) ==
        ErrorCode::ColumnOutOfRange);
  CHECK(code_of({{{EventKind::cap, 1}}}) == ErrorCode::NegativeWidth);
  CHECK(code_of({{{EventKind::cup, 2}, {EventKind::cap, 1}}}) == ErrorCode::ColumnOutOfRange);
  CHECK(widths(D(kHopf)) == std::vector<int>{0, 2, 4, 4, 4, 2, 0});
}

TEST_CASE("text form round trip and line numbers") {
  const std::string text = "orient: +1 -2\ncup 1\ncup 3\nx+ 2\nx- 2\ncap 3\ncap 1\n";
  const auto p = parse_diagram(text);
  REQUIRE(p.orientation);
  CHECK(p.orientation->flags == std::vector<int>{1, -1});
  CHECK(format_diagram(p.diagram, p.orientation) == text);
  CHECK(format_diagram(D(kHopf)) == kHopf);
  CHECK(parse_diagram("# a comment\n\ncup 1\n  cap 1  # trailing\n").diagram == D(kUnknot));
  try {
    parse_diagram("cup 1\nx+ 2\ncap 1\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_diagram("cup 1\nbend 1\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_diagram("orient: +1\ncup 1\ncap 1\ncup 1\ncap 1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("cup 1\n"), ParseError);
}

TEST_CASE("default orientation of the unknot") {
  const MorseDiagram u = D(kUnknot);
  const DiagramGraph g(u);
  CHECK(g.component_count() == 1);
  const auto dir = g.directions(orient(u));
  CHECK(dir[g.node(1, 0)] == 1);
  CHECK(dir[g.node(1, 1)] == -1);
  const auto flipped = g.directions(orient(u, {true}));
  CHECK(flipped[g.node(1, 0)] == -1);
  CHECK(flipped[g.node(1, 1)] == 1);
}

TEST_CASE("stacked unknots are independent") {
  const MorseDiagram d = D("cup 1\ncap 1\ncup 1\ncap 1\n");
  const DiagramGraph g(d);
  CHECK(g.component_count() == 2);
  CHECK(orient(d).flags == std::vector<int>{1, 1});
  const auto dir = g.directions(orient(d, {false, true}));
  CHECK(dir[g.node(1, 0)] == 1);
  CHECK(dir[g.node(3, 0)] == -1);
}

TEST_CASE("components and writhe") {
  CHECK(components(D(kUnknot)) == 1);
  CHECK(components(D(kHopf)) == 2);
  CHECK(components(D(kTrefoil)) == 1);
  CHECK(writhe(D(kUnknot), orient(D(kUnknot))) == 0);
  const MorseDiagram kink = D("cup 1\ncup 2\nx+ 1\ncap 2\ncap 1\n");
  CHECK(components(kink) == 1);
  CHECK(std::abs(writhe(kink, orient(kink))) == 1);
  const MorseDiagram c = closure(B("B2: 1 1 1"));
  CHECK(writhe(c, orient(c)) == 3);
  const MorseDiagram h = closure(B("B2: 1 1"));
  CHECK(writhe(h, orient(h)) == 2);
}

TEST_CASE("Kauffman bracket values") {
  CHECK(kauffman_bracket(D(kUnknot)) == LaurentPoly(1));
  CHECK(kauffman_bracket(D(kHopf)) == m(-1, -4) - m(1, 4));
  CHECK(kauffman_bracket(closure(B("B2: 1 1"))) == m(-1, -4) - m(1, 4));
  CHECK(kauffman_bracket(closure(B("B2: 1 1 1"))) == bracket_via_tl(B("B2: 1 1 1")));
  CHECK(kauffman_bracket(D("cup 1\ncap 1\ncup 1\ncap 1\n")) == m(-1, 2) - m(1, -2));
  CHECK_THROWS_AS(kauffman_bracket(MorseDiagram{}), Error);
  CHECK_THROWS_AS(kauffman_bracket(closure(B("B2: 1 1 1 1 1")), 4), Error);
}

TEST_CASE("state sum and transfer bracket agree") {
  Rng rng(17);
  for (int t = 0; t < 150; ++t) {
    const MorseDiagram d = random_diagram(rng, {8, 6, 30});
    CHECK(kauffman_bracket(d) == kauffman_bracket_transfer(d));
  }
}

TEST_CASE("Jones of the trefoil and reversal of every component") {
  const MorseDiagram t = closure(B("B2: 1 1 1"));
  const LaurentPoly j = jones(t, orient(t));
  CHECK(j == normalized_jones(B("B2: 1 1 1")));
  // Right-handed trefoil, -q^-4 + q^-3 + q^-1, or its mirror; q^(1/2) units.
  const LaurentPoly right = m(-1, -8) + m(1, -6) + m(1, -2);
  CHECK((j == right || j == right.substitute_power(-1)));
  CHECK(jones(D(kUnknot), orient(D(kUnknot))) == LaurentPoly(1));

  Rng rng(23);
  for (int t2 = 0; t2 < 60; ++t2) {
    const MorseDiagram d = random_diagram(rng);
    std::vector<bool> all(static_cast<std::size_t>(components(d)), true);
    CHECK(jones(d, orient(d)) == jones(d, orient(d, all)));
  }
}

TEST_CASE("orientation carried through a rewrite") {
  const MorseDiagram before = D(kHopf);
  const Orientation o = orient(before, {false, true});
  // Insert a trivial cup/cap pair at the bottom gap.
  MorseDiagram after = before;
  after.events.push_back({EventKind::cup, 1});
  after.events.push_back({EventKind::cap, 1});
  const Orientation carried = carry_orientation(before, o, after, 6, 0, 2);
  CHECK(carried.flags.size() == 3);
  CHECK(carried.flags[0] == o.flags[0]);
  CHECK(carried.flags[1] == o.flags[1]);
}
