#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidcalc/braid_word.hpp"

namespace braidcalc {

enum class LMoveKind { over, under };

// Parameters of one L-move on a word a in B_n. The word is split as
// a = a1 a2 with a1 = the first `split` letters, and the new strand pair is
// created at column i, 1 <= i <= n+1.
struct LMoveSpec {
  LMoveKind kind = LMoveKind::over;
  int sign = 1;
  std::size_t split = 0;
  int column = 1;

  friend bool operator==(const LMoveSpec&, const LMoveSpec&) = default;
};

// sigma_j -> sigma_{j+1} for column <= j <= n-1; the result lives in B_{n+1}.
BraidWord shift_word(const BraidWord& a, int column);

bool lmove_spec_valid(const BraidWord& a, const LMoveSpec& spec);

// The L-move as a word in B_{n+1}, returned unreduced:
//
//   B1 . a1'' . C . sigma_n^sign . C^-1 . a2'' . B1^-1
//
// with e = -1 for over and +1 for under,
//   B1 = sigma_i^e sigma_{i+1}^e ... sigma_n^e
//   C  = sigma_i^e ... sigma_{n-1}^e
// and a'' the column shift of a in which a letter sigma_{i-1}^s (the one
// crossing that straddles the cut column) is written
// sigma_i^e sigma_{i-1}^s sigma_i^-e so the new strand passes over (under)
// it too. Subscripts outside 1..n drop out. At columns 1 and n+1 this is the
// textbook substitution verbatim; the straddling rule is what keeps interior
// columns isotopy-preserving.
BraidWord apply_lmove(const BraidWord& a, const LMoveSpec& spec);

// Every valid spec for a, ordered by kind, sign, split, column.
std::vector<LMoveSpec> lmove_grid(const BraidWord& a);

struct LMoveUndo {
  LMoveSpec spec;
  BraidWord source;  // in B_{n-1}
};

// Words b and specs s with free_reduce(apply_lmove(b, s)) == free_reduce(a).
// Pattern based: sound (each result is verified) but not complete. Ordered
// by kind, sign, column, split; duplicates removed.
std::vector<LMoveUndo> detect_lmove(const BraidWord& a);

// "lmove over + split=1 col=3". The leading "lmove" is optional on input.
std::string format_lmove_spec(const LMoveSpec& spec);
LMoveSpec parse_lmove_spec(std::string_view text);

}  // namespace braidcalc
