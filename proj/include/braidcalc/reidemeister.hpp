#pragma once

#include <cstddef>
#include <vector>

#include "braidcalc/diagram.hpp"

namespace braidcalc {

// Reidemeister moves as Morse-event rewrites. Insertions name a gap (0..m,
// the level between events gap-1 and gap) or an event; removals name the
// first event of a matched template. s is a crossing sign, c a column.
//
//   R1 kink_left     strand c at a gap      -> [cup c, x^s c+1, cap c]
//   R1 kink_right    strand c at a gap      -> [cup c+1, x^s c, cap c+1]
//   R2 vertical      strands c, c+1 at a gap -> [x^s c, x^-s c]
//   R2 cap_left      [cap c], strand at c-1 -> [x^s c-1, x^s c, cap c-1]
//   R2 cap_right     [cap c], strand at c+2 -> [x^s c+1, x^s c, cap c+1]
//   R2 cup_left      [cup c], strand at c-1 -> [cup c-1, x^s c, x^s c-1]
//   R2 cup_right     [cup c], strand at c+2 -> [cup c+1, x^s c, x^s c+1]
//   R3 forward       [x^a c, x^b c+1, x^d c] -> [x^d c+1, x^b c, x^a c+1]
//   R3 backward      [x^a c+1, x^b c, x^d c+1] -> [x^d c, x^b c+1, x^a c]
//
// In R2 slides the moving strand crosses both arms on the same side. R3
// applies for every sign triple except a = d = -b, where the middle strand
// would have to pass through the crossing of the other two.
enum class RMove { r1, r2, r3 };
enum class RVariant {
  kink_left,
  kink_right,
  vertical,
  cap_left,
  cap_right,
  cup_left,
  cup_right,
  forward,
  backward,
  remove,  // undo any R1/R2 insertion whose result starts at `index`
};

struct RSite {
  RMove move = RMove::r1;
  RVariant variant = RVariant::kink_left;
  std::size_t index = 0;  // gap for insertions into a gap, else event index
  int column = 1;         // strand or crossing column; unused for event rewrites
  int sign = 1;

  friend bool operator==(const RSite&, const RSite&) = default;
};

struct Rewrite {
  MorseDiagram diagram;
  // Events [start, start+removed) were replaced by [start, start+inserted).
  std::size_t start = 0;
  std::size_t removed = 0;
  std::size_t inserted = 0;
};

// Throws Error{NoMatch} when the template does not match at the site and
// Error{ColumnOutOfRange}/Error{PositionOutOfRange} for impossible sites.
Rewrite apply_reidemeister(const MorseDiagram& d, const RSite& site);

MorseDiagram apply_r1(const MorseDiagram& d, const RSite& site);
MorseDiagram apply_r2(const MorseDiagram& d, const RSite& site);
MorseDiagram apply_r3(const MorseDiagram& d, const RSite& site);

// Every site where apply_reidemeister succeeds, ordered by move, index,
// variant, column and sign.
std::vector<RSite> reidemeister_sites(const MorseDiagram& d);

}  // namespace braidcalc
